"""Minimal-count Toeplitz and Hankel decompositions.

The product map sends an r-tuple of Toeplitz matrices to their ordered
product. For r at least floor(n/2) + 1 its differential has full rank n^2
at generic tuples, so a generic matrix is a product of that many Toeplitz
(equally Hankel) factors, and no fewer: an r-1 tuple has only
(r-1)(2n-1) < n^2 parameters.

``rank_certificate`` checks the full-rank statement numerically at an
explicit tuple built from the shift basis, ``gauss_newton_decompose``
solves for an actual decomposition by Levenberg-damped Gauss-Newton on
the residual of the product map, and ``closed_form_2x2`` evaluates the
explicit two-factor parameterization available at n = 2.

Factor tuples are never unique: rescaling the factors by scalars with
product 1 leaves the product unchanged, and the full preimage of a point
has dimension r(2n-1) - n^2. Only the product is contracted, not the
factor values.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError
from .generate import complex_normal
from .structmat import (
    FactorChain,
    HankelSpec,
    ToeplitzSpec,
    as_square_matrix,
    densify,
    relative_residual,
)

__all__ = [
    "ToeplitzTuple",
    "JacobianMatrix",
    "GaussNewtonConfig",
    "DecompositionResult",
    "RankCertificate",
    "minimal_factor_count",
    "tuple_product",
    "product_jacobian",
    "certificate_tuple",
    "rank_certificate",
    "gauss_newton_decompose",
    "gauss_newton_hankel_decompose",
    "closed_form_2x2",
]

RANK_RTOL = 1e-8


def minimal_factor_count(n):
    """Fewest structured factors that suffice for a generic n-by-n matrix."""
    return n // 2 + 1


@dataclass(frozen=True, eq=False)
class ToeplitzTuple:
    """An ordered tuple of Toeplitz factors of common dimension."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise ValueError("tuple must contain at least one factor")
        for f in factors:
            if not isinstance(f, ToeplitzSpec):
                raise TypeError("all factors must be ToeplitzSpec")
            if f.n != factors[0].n:
                raise ValueError("factors must share a dimension")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self):
        return self.factors[0].n

    @property
    def r(self):
        return len(self.factors)


@dataclass(frozen=True, eq=False)
class JacobianMatrix:
    """Differential of the product map at a factor tuple.

    ``matrix`` is n^2 by r(2n-1), complex; rows follow the row-major
    flattening of the product, and column (i, k) is the flattening of
    F_1 ... F_{i-1} B_k F_{i+1} ... F_r with B_k the basis matrix of the
    factor family (1s on diagonal or anti-diagonal offset k).
    """

    n: int
    r: int
    matrix: np.ndarray

    def column(self, factor_index, offset):
        """Column for factor ``factor_index`` (0-based) and offset ``offset``."""
        p = 2 * self.n - 1
        return self.matrix[:, factor_index * p + offset + self.n - 1]


@dataclass
class GaussNewtonConfig:
    """Settings for the damped Gauss-Newton driver.

    The damping parameter multiplies by ``damping_growth`` on each
    rejected step and by ``damping_shrink`` on each accepted one.
    Restart index ``i`` draws from the stream seeded by ``(seed, i)``;
    the first success in restart order wins.
    """

    max_iterations: int = 300
    residual_tolerance: float = 1e-8
    max_restarts: int = 20
    seed: object = 0
    damping_init: float = 1e-3
    damping_growth: float = 10.0
    damping_shrink: float = 0.1
    step_tolerance: float = 1e-14

    def __post_init__(self):
        if min(self.max_iterations, self.max_restarts) < 1:
            raise ValueError("iteration and restart budgets must be positive")
        if min(self.residual_tolerance, self.damping_init, self.damping_growth,
               self.damping_shrink, self.step_tolerance) <= 0:
            raise ValueError("tolerances and damping factors must be positive")
        if self.residual_tolerance < 100 * np.finfo(np.float64).eps:
            raise ValueError("residual tolerance below 100 * machine epsilon")


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    """Factors found by the solver plus convergence bookkeeping."""

    factors: tuple
    residual: float
    restarts: int
    iterations: int

    def chain(self):
        return FactorChain(self.factors[0].n, self.factors)


@dataclass(frozen=True)
class RankCertificate:
    """Numerical rank of the product-map differential at a seeded tuple."""

    n: int
    r: int
    rank: int
    required_rank: int
    passed: bool
    obstruction_dim: int
    obstruction_ok: bool


# ---------------------------------------------------------------------------
# product-map machinery over diagonal (Toeplitz) or anti-diagonal (Hankel)
# coordinates


def _coeff_matrix(c, n, kind):
    j = np.arange(n)
    if kind == "toeplitz":
        return c[j[None, :] - j[:, None] + n - 1]
    return c[j[None, :] + j[:, None]]


def _shift_rows(M, k):
    """Rows of M shifted up by k (down for negative k), zero filled."""
    out = np.zeros_like(M)
    if k >= 0:
        out[:M.shape[0] - k] = M[k:]
    else:
        out[-k:] = M[:M.shape[0] + k]
    return out


def _product_and_mats(C, n, kind):
    mats = [_coeff_matrix(c, n, kind) for c in C]
    P = mats[0]
    for M in mats[1:]:
        P = P @ M
    return P, mats


def _jacobian(C, n, kind):
    r = C.shape[0]
    _, mats = _product_and_mats(C, n, kind)
    pres = [np.eye(n, dtype=np.complex128)]
    for i in range(r - 1):
        pres.append(pres[-1] @ mats[i])
    sufs = [np.eye(n, dtype=np.complex128)]
    for i in range(r - 1, 0, -1):
        sufs.append(mats[i] @ sufs[-1])
    sufs.reverse()
    cols = np.empty((r * (2 * n - 1), n * n), dtype=np.complex128)
    idx = 0
    for i in range(r):
        # anti-diagonal basis matrices are the row-flipped diagonal ones,
        # absorbed here into the prefix
        pre = pres[i][:, ::-1] if kind == "hankel" else pres[i]
        for k in range(-(n - 1), n):
            cols[idx] = (pre @ _shift_rows(sufs[i], k)).reshape(-1)
            idx += 1
    return cols.T


def tuple_product(tup):
    """Dense product of the factors of a ToeplitzTuple."""
    C = np.array([f.diag for f in tup.factors])
    P, _ = _product_and_mats(C, tup.n, "toeplitz")
    return P


def product_jacobian(tup):
    """Analytic differential of the product map at ``tup``."""
    C = np.array([f.diag for f in tup.factors])
    return JacobianMatrix(tup.n, tup.r, _jacobian(C, tup.n, "toeplitz"))


# ---------------------------------------------------------------------------
# full-rank certificate


def certificate_tuple(n, t_values):
    """Tuple of shift-basis perturbations of the identity.

    Factor i (1-based) is B_0 + t_i (B_{n-i} - B_{-(n-i)}). At such a
    point with generic nonzero t values the product-map differential has
    full rank n^2. Accepts r or r-1 values, r = floor(n/2) + 1; a missing
    last value defaults to 0 (the final factor's offset is the one the
    full-rank argument never needs).
    """
    r = minimal_factor_count(n)
    t = np.asarray(t_values, dtype=np.complex128)
    if t.shape == (r - 1,):
        t = np.concatenate([t, [0.0]])
    if t.shape != (r,):
        raise ValueError(f"expected {r - 1} or {r} t-values, got shape {t.shape}")
    if not np.all(np.isfinite(t)):
        raise ValueError("t-values must be finite")
    factors = []
    for i in range(1, r + 1):
        diag = np.zeros(2 * n - 1, dtype=np.complex128)
        diag[n - 1] = 1.0
        k = n - i
        if k != 0:
            diag[n - 1 + k] += t[i - 1]
            diag[n - 1 - k] -= t[i - 1]
        factors.append(ToeplitzSpec(n, diag))
    return ToeplitzTuple(tuple(factors))


def rank_certificate(n, seed, rank_rtol=RANK_RTOL):
    """Numerically certify that the differential reaches full rank n^2.

    Draws nonzero t-values from the seed, builds the certificate tuple at
    r = floor(n/2) + 1, and counts singular values above ``rank_rtol``
    times the largest one. Also checks the sharpness obstruction: one
    fewer factor gives only floor(n/2) (2n-1) < n^2 parameters.
    """
    if n < 2:
        raise ValueError("certificate requires dimension at least 2")
    r = minimal_factor_count(n)
    rng = np.random.default_rng(_seed_entropy(seed, 0))
    t = complex_normal(rng, r - 1)
    while np.any(np.abs(t) < 1e-3):
        t = complex_normal(rng, r - 1)
    tup = certificate_tuple(n, t)
    sv = np.linalg.svd(product_jacobian(tup).matrix, compute_uv=False)
    rank = int(np.sum(sv > rank_rtol * sv[0]))
    obstruction = (r - 1) * (2 * n - 1)
    return RankCertificate(
        n=n,
        r=r,
        rank=rank,
        required_rank=n * n,
        passed=rank == n * n,
        obstruction_dim=obstruction,
        obstruction_ok=obstruction < n * n,
    )


# ---------------------------------------------------------------------------
# Levenberg-damped Gauss-Newton on the product-map residual


def _seed_entropy(seed, index):
    if isinstance(seed, (tuple, list)):
        return (*[int(s) for s in seed], index)
    return (int(seed), index)


def _realify_matrix(M):
    return np.block([[M.real, -M.imag], [M.imag, M.real]])


def _levenberg_solve(target, C0, n, kind, cfg):
    """Minimize ||product(C) - target||_F from C0. Returns (C, residual, iters).

    Each step solves the damped normal equations of the least-squares
    problem with unknowns split into real and imaginary parts; for the
    polynomial product map this equals the complex damped step.
    """
    scale = np.linalg.norm(target)
    if scale == 0.0:
        scale = 1.0
    C = C0.copy()
    r, p = C.shape
    lam = cfg.damping_init
    F = (_product_and_mats(C, n, kind)[0] - target).reshape(-1)
    res = np.linalg.norm(F) / scale
    iters = 0
    while iters < cfg.max_iterations:
        if res <= cfg.residual_tolerance:
            break
        J = _realify_matrix(_jacobian(C, n, kind))
        Fr = np.concatenate([F.real, F.imag])
        G = J.T @ J
        g = J.T @ Fr
        accepted = False
        delta = None
        while lam < 1e18:
            try:
                d = np.linalg.solve(G + lam * np.eye(G.shape[0]), -g)
            except np.linalg.LinAlgError:
                lam *= cfg.damping_growth
                continue
            delta = d[:r * p] + 1j * d[r * p:]
            Cn = C + delta.reshape(r, p)
            Fn = (_product_and_mats(Cn, n, kind)[0] - target).reshape(-1)
            rn = np.linalg.norm(Fn) / scale
            if rn < res:
                C, F, res = Cn, Fn, rn
                lam = max(lam * cfg.damping_shrink, 1e-14)
                accepted = True
                break
            lam *= cfg.damping_growth
        iters += 1
        if not accepted:
            break
        if np.linalg.norm(delta) <= cfg.step_tolerance * (1.0 + np.linalg.norm(C)):
            break
    return C, res, iters


def _certificate_coeffs(n, r, rng, scale, kind):
    t = scale * complex_normal(rng, r)
    C = np.zeros((r, 2 * n - 1), dtype=np.complex128)
    for i in range(1, r + 1):
        C[i - 1, n - 1] = 1.0
        k = n - i
        if 0 < abs(k) <= n - 1:
            C[i - 1, n - 1 + k] += t[i - 1]
            C[i - 1, n - 1 - k] -= t[i - 1]
    if kind == "hankel":
        # H = exch @ T for odd positions, T @ exch for even: both keep the
        # stored coefficient vector up to orientation
        for i in range(r):
            if i % 2 == 1:
                C[i] = C[i][::-1]
    return C


def _start_coeffs(n, r, restart, rng, kind):
    p = 2 * n - 1
    style = restart % 3
    if style == 0:
        scale = (0.1, 0.5, 1.0)[(restart // 3) % 3]
        return _certificate_coeffs(n, r, rng, scale, kind)
    C = complex_normal(rng, (r, p))
    if style == 1:
        for i in range(r):
            C[i] /= np.linalg.norm(_coeff_matrix(C[i], n, kind))
    return C


def _gauss_newton(A, r, cfg, kind):
    A = as_square_matrix(A)
    n = A.shape[0]
    if r < 1:
        raise ValueError("factor count must be positive")
    r_min = minimal_factor_count(n)
    if r < r_min:
        warnings.warn(
            f"{r} factors is below the generic minimum {r_min} for n={n}; "
            "success has probability zero for generic input",
            stacklevel=3)
    cfg = cfg or GaussNewtonConfig()
    scale = np.linalg.norm(A)
    target = A / scale if scale > 0 else A
    best = np.inf
    for restart in range(cfg.max_restarts):
        rng = np.random.default_rng(_seed_entropy(cfg.seed, restart))
        C0 = _start_coeffs(n, r, restart, rng, kind)
        C, res, iters = _levenberg_solve(target, C0, n, kind, cfg)
        best = min(best, res)
        if res <= cfg.residual_tolerance:
            if scale > 0:
                C[0] *= scale
            spec_cls = ToeplitzSpec if kind == "toeplitz" else HankelSpec
            factors = tuple(spec_cls(n, c) for c in C)
            product = _product_and_mats(C, n, kind)[0]
            residual = relative_residual(product, A)
            if residual <= cfg.residual_tolerance:
                return DecompositionResult(factors, residual, restart, iters)
            best = min(best, residual)
    raise ConvergenceError(
        f"no {kind} decomposition found within {cfg.max_restarts} restarts "
        f"(best residual {best:.3e}); the input may be non-generic",
        best_residual=best)


def gauss_newton_decompose(A, r=None, config=None):
    """Decompose A into r Toeplitz factors by damped Gauss-Newton.

    ``r`` defaults to floor(n/2) + 1. The returned residual is the
    relative Frobenius reconstruction error, recomputed from a dense
    product independent of the solver's internal state.
    """
    A = as_square_matrix(A)
    if r is None:
        r = minimal_factor_count(A.shape[0])
    return _gauss_newton(A, r, config, "toeplitz")


def gauss_newton_hankel_decompose(A, r=None, config=None):
    """Decompose A into r Hankel factors (see ``gauss_newton_decompose``)."""
    A = as_square_matrix(A)
    if r is None:
        r = minimal_factor_count(A.shape[0])
    return _gauss_newton(A, r, config, "hankel")


# ---------------------------------------------------------------------------
# closed form at n = 2


def closed_form_2x2(A, seed, max_draws=8):
    """Two Toeplitz factors for an arbitrary 2-by-2 matrix.

    Writes A = [[x, y], [z, x]] @ [[s, t], [u, s]] with s fixed to 1. For
    diagonal A the pair ([[0, a], [d, 0]], exchange) is exact; when only
    the bottom-left entry vanishes the compatibility constraint pins u and
    leaves t free; otherwise u is drawn from the seed and the constraint
    is a quadratic in t. Degenerate draws (1 - t u near 0) are redrawn.
    """
    A = as_square_matrix(A)
    if A.shape[0] != 2:
        raise ValueError("closed form applies to 2-by-2 matrices only")
    a, b = A[0, 0], A[0, 1]
    c, d = A[1, 0], A[1, 1]
    tol = 1e-12 * max(1.0, float(np.linalg.norm(A)))

    def pair(x, y, z, t, u):
        F1 = ToeplitzSpec(2, np.array([z, x, y]))
        F2 = ToeplitzSpec(2, np.array([u, 1.0, t]))
        if np.linalg.norm(densify(F1) @ densify(F2) - A) <= tol:
            return ToeplitzTuple((F1, F2))
        return None

    if b == 0 and c == 0:
        F1 = ToeplitzSpec(2, np.array([d, 0.0, a]))
        F2 = ToeplitzSpec(2, np.array([1.0, 0.0, 1.0]))
        return ToeplitzTuple((F1, F2))

    rng = np.random.default_rng(_seed_entropy(seed, 0))
    for _ in range(max_draws):
        if c == 0:
            # constraint degenerates unless u = (a - d) / b; then any t works
            u = (a - d) / b
            t = complex_normal(rng, ())
            roots = [t]
        else:
            u = complex_normal(rng, ())
            # constraint at s = 1: (-c u) t^2 + (c + b u^2 + (d - a) u) t + (a - d - b u) = 0
            coeffs = np.array([-c * u, c + b * u * u + (d - a) * u, a - d - b * u])
            roots = [z for z in np.roots(coeffs) if np.isfinite(z)]
        for t in roots:
            den = 1.0 - t * u
            if abs(den) < 1e-8:
                continue
            x = (a - b * u) / den
            y = (b - a * t) / den
            z = (c - c * t * u - a * u + b * u * u) / den
            result = pair(x, y, z, t, u)
            if result is not None:
                return result
    raise ConvergenceError(
        f"no admissible parameter draw after {max_draws} attempts")
