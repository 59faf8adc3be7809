"""Elimination-based decomposition into Toeplitz (or Hankel) chains.

A generic n-by-n matrix factors as

    A = T_1 T_2 P_1 T_3 T_4 P_2 ... T_{2n-1} T_{2n} P_n

with 2n Toeplitz factors and n permutations, in O(n^3) arithmetic:

1. column-elimination writes A as a product of n elementary factors
   I + v_k e_k^T, where v_k is read off column k of the stage-k working
   matrix and the working matrix is updated by the rank-one inverse
   (I + v e_k^T)^{-1} = I - v e_k^T / (1 + v[k]);
2. conjugating by a permutation that sends 1 to k recenters each factor
   to I + w e_1^T;
3. I + w e_1^T = W (W^{-1} + E) splits into upper-triangular Toeplitz
   W (last column w) times its inverse plus the bottom-left unit E,
   which is again Toeplitz.

Conditioning. The reciprocal of W's generating polynomial can grow like
(1/rho)^n with rho the smallest root modulus, and float64 evaluation of
the chain then loses roughly that many digits, so the textbook variant
(recenter with the transposition 1<->k, eliminate columns left to right)
is hopeless beyond small n for generic input. Two lawful freedoms fix
this without changing the factor shape or counts:

* any recentering permutation with sigma(1) = k works, and the free
  entries of w can be ordered to keep the reciprocal flat (each next
  coefficient is picked greedily to cancel the running convolution);
* the chain may factor A @ Q for any permutation Q, absorbing Q^{-1}
  into the final permutation slot; choosing columns adaptively is then
  ordinary column pivoting, and the choice of Q's first column controls
  the one stage whose recentering order is pinned.

The decomposition first runs the plain variant and keeps it when every
stage is tame (so reproducible textbook outputs, e.g. for small integer
samples, are bit-for-bit those of the plain route); otherwise it reruns
with pivoting and greedy recentering. Near-zero pivots raise
``NonGenericMatrixError`` carrying the failing stage.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NonGenericMatrixError, SingularFactorError
from .fastmul import upper_toeplitz_inverse
from .operators import exchange_permutation, hankel_from_toeplitz
from .structmat import (
    FactorChain,
    PermutationSpec,
    ToeplitzSpec,
    as_square_matrix,
    shift_basis,
)

__all__ = [
    "ElementaryColumnFactor",
    "RecenteredFactor",
    "TriangularSplit",
    "elementary_column_factorize",
    "recenter",
    "triangular_split",
    "toeplitz_permutation_decompose",
    "hankel_permutation_decompose",
]

PIVOT_RTOL = 1e-12
# per-stage reciprocal amplification max|w| * max|1/p|; float64 chain
# evaluation loses about that factor over epsilon, so the textbook route
# is abandoned beyond PLAIN_GROWTH_LIMIT and the conditioned route
# reorders whenever a transposition-recentered stage exceeds
# STAGE_GROWTH_LIMIT
PLAIN_GROWTH_LIMIT = 1e4
STAGE_GROWTH_LIMIT = 1e2


@dataclass(frozen=True)
class ElementaryColumnFactor:
    """I + v e_k^T; differs from the identity only in column k (1-based)."""

    k: int
    v: np.ndarray

    def densify(self):
        n = self.v.shape[0]
        M = np.eye(n, dtype=np.complex128)
        M[:, self.k - 1] += self.v
        return M


@dataclass(frozen=True)
class RecenteredFactor:
    """pi (I + w e_1^T) pi with pi the transposition 1<->k."""

    k: int
    pi: PermutationSpec
    w: np.ndarray


@dataclass(frozen=True)
class TriangularSplit:
    """W (upper-triangular Toeplitz) and V = W^{-1} + E with dense(W) @ dense(V) = I + w e_1^T."""

    W: ToeplitzSpec
    V: ToeplitzSpec


def transposition(n, k):
    """PermutationSpec for the transposition 1<->k (1-based k)."""
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range for dimension {n}")
    p = np.arange(n)
    p[0], p[k - 1] = p[k - 1], p[0]
    return PermutationSpec(n, p)


def elementary_column_factorize(A, pivot_rtol=PIVOT_RTOL):
    """Factor A into n elementary column factors, left to right.

    Requires every stage pivot (the (k, k) entry of the stage-k working
    matrix) to stay above ``pivot_rtol`` times the largest entry of A.
    """
    A = as_square_matrix(A)
    n = A.shape[0]
    scale = max(float(np.max(np.abs(A))), 1e-300)
    V, fail = kernels.ge_stage_vectors(np.ascontiguousarray(A), pivot_rtol * scale)
    if fail >= 0:
        raise NonGenericMatrixError(
            f"zero pivot at elimination stage {fail + 1}; input is not generic",
            stage=fail + 1)
    return [ElementaryColumnFactor(k + 1, V[:, k].copy()) for k in range(n)]


def recenter(factor):
    """Move an elementary factor's active column to column 1."""
    n = factor.v.shape[0]
    pi = transposition(n, factor.k)
    w = factor.v[pi.perm]
    return RecenteredFactor(factor.k, pi, w)


def triangular_split(w, singular_rtol=PIVOT_RTOL):
    """Split I + w e_1^T into upper-triangular Toeplitz W times V = W^{-1} + E.

    W is the upper-triangular Toeplitz matrix whose last column is w, so
    its main diagonal is w[-1]; that value must be nonzero for the split
    to exist. E is the matrix with a single 1 in the bottom-left corner,
    which sits on diagonal -(n-1) and keeps V Toeplitz.
    """
    w = np.asarray(w, dtype=np.complex128)
    n = w.shape[0]
    scale = max(float(np.max(np.abs(w))), 1e-300)
    if abs(w[-1]) < singular_rtol * scale:
        raise SingularFactorError(
            "last component of the recentered vector is (near) zero; "
            "the triangular split does not exist")
    diag = np.zeros(2 * n - 1, dtype=np.complex128)
    diag[n - 1:] = w[::-1]
    W = ToeplitzSpec(n, diag)
    V_inv = upper_toeplitz_inverse(W)
    vdiag = V_inv.diag.copy()
    vdiag[0] += 1.0
    return TriangularSplit(W, ToeplitzSpec(n, vdiag))


# ---------------------------------------------------------------------------
# chain assembly with conditioning fallback


def _reciprocal_growth(w):
    """Dimensionless amplification of the split for recentered vector w."""
    if w[-1] == 0:
        return np.inf
    rec = kernels.ut_reciprocal(np.ascontiguousarray(w[::-1]))
    worst = float(np.max(np.abs(rec)))
    if not np.isfinite(worst):
        return np.inf
    return worst * float(np.max(np.abs(w)))


def _identity_pair(n):
    return shift_basis(0, n), shift_basis(0, n)


def _transposition_sigma(n, k):
    sigma = np.arange(n)
    sigma[0], sigma[k] = k, 0
    return sigma


def _pair_from_w(w, pivot_tol):
    if abs(w[-1]) < pivot_tol:
        raise SingularFactorError(
            "last component of the recentered vector is (near) zero; "
            "the triangular split does not exist")
    n = w.shape[0]
    diag = np.zeros(2 * n - 1, dtype=np.complex128)
    diag[n - 1:] = w[::-1]
    rec = kernels.ut_reciprocal(np.ascontiguousarray(w[::-1]))
    if not np.all(np.isfinite(rec)):
        raise SingularFactorError("triangular factor inverse overflowed")
    vdiag = np.zeros(2 * n - 1, dtype=np.complex128)
    vdiag[n - 1:] = rec
    vdiag[0] += 1.0
    return ToeplitzSpec(n, diag), ToeplitzSpec(n, vdiag)


def _plain_pieces(A, pivot_tol, scale):
    """Textbook route; None when any stage is too ill-conditioned for float64."""
    n = A.shape[0]
    V, fail = kernels.ge_stage_vectors(np.ascontiguousarray(A), pivot_tol)
    if fail >= 0:
        return None
    pieces = []
    for k in range(n):
        v = V[:, k]
        sigma = _transposition_sigma(n, k)
        w = v[sigma]
        if not w.any():
            pieces.append((*_identity_pair(n), sigma))
            continue
        if float(np.max(np.abs(v))) > 1e3 * scale:
            # runaway working matrix; the pivoted route bounds it
            return None
        if abs(w[-1]) < pivot_tol or _reciprocal_growth(w) > PLAIN_GROWTH_LIMIT:
            return None
        pieces.append((*_pair_from_w(w, pivot_tol), sigma))
    return pieces


def _choose_first_column(A, pivot_tol):
    """Column of A pinned at position 1 by the conditioned route.

    The first stage cannot reorder its recentered vector (its permutation
    is the identity), so its split amplification is decided here. Each
    column is scored by the float64 error floor of its stage: reciprocal
    amplification times the norm of the rank-one stage inverse, which is
    1 + ||w|| / |pivot|. The smallest floor wins.
    """
    n = A.shape[0]
    pivots = np.abs(A[0, :])
    scores = np.full(n, np.inf)
    for j in range(n):
        if pivots[j] < pivot_tol:
            continue
        w = A[:, j].copy()
        w[0] -= 1.0
        if not w.any():
            scores[j] = 1.0
            continue
        amplification = 1.0 + float(np.linalg.norm(w)) / pivots[j]
        scores[j] = _reciprocal_growth(w) * amplification
    if not np.any(np.isfinite(scores)):
        raise NonGenericMatrixError(
            "zero pivot at elimination stage 1; input is not generic", stage=1)
    return int(np.argmin(scores))


def _conditioned_pieces(A, pivot_tol):
    n = A.shape[0]
    first = _choose_first_column(A, pivot_tol)
    V, cols, fail = kernels.ge_stage_vectors_pivoted(
        np.ascontiguousarray(A), pivot_tol, first)
    if fail >= 0:
        raise NonGenericMatrixError(
            f"zero pivot at elimination stage {fail + 1}; input is not generic",
            stage=fail + 1)
    pieces = []
    for k in range(n):
        v = V[:, k]
        sigma = _transposition_sigma(n, k)
        w = v[sigma]
        if not w.any():
            pieces.append((*_identity_pair(n), sigma))
            continue
        if k > 0:
            growth = _reciprocal_growth(w)
            if growth > STAGE_GROWTH_LIMIT:
                sigma_g = kernels.greedy_sigma(np.ascontiguousarray(v), k)
                w_g = v[sigma_g]
                if _reciprocal_growth(w_g) < growth:
                    sigma, w = sigma_g, w_g
        try:
            W, Vfac = _pair_from_w(w, pivot_tol)
        except SingularFactorError as exc:
            raise NonGenericMatrixError(f"stage {k + 1}: {exc}", stage=k + 1) from exc
        pieces.append((W, Vfac, sigma))
    return pieces, PermutationSpec(n, cols)


def _inverse_perm(sigma):
    inv = np.empty_like(sigma)
    inv[sigma] = np.arange(sigma.shape[0])
    return inv


def _split_chain_pieces(A, pivot_rtol):
    A = as_square_matrix(A)
    n = A.shape[0]
    scale = max(float(np.max(np.abs(A))), 1e-300)
    pivot_tol = pivot_rtol * scale
    column_perm = None
    pieces = _plain_pieces(A, pivot_tol, scale)
    if pieces is None:
        pieces, column_perm = _conditioned_pieces(A, pivot_tol)
    pairs = [(W, V) for W, V, _ in pieces]
    sigmas = [sigma for _, _, sigma in pieces]
    perms = []
    for k in range(n):
        left = _inverse_perm(sigmas[k])
        if k < n - 1:
            perms.append(PermutationSpec(n, left[sigmas[k + 1]]))
        elif column_perm is None:
            perms.append(PermutationSpec(n, left))
        else:
            # undo the column selection in the final permutation slot
            perms.append(PermutationSpec(n, left[_inverse_perm(column_perm.perm)]))
    return n, pairs, perms


def toeplitz_permutation_decompose(A, pivot_rtol=PIVOT_RTOL):
    """Decompose A into the 2n-Toeplitz, n-permutation chain."""
    n, pairs, perms = _split_chain_pieces(A, pivot_rtol)
    factors = []
    for (W, V), P in zip(pairs, perms):
        factors.extend([W, V, P])
    return FactorChain(n, tuple(factors))


def hankel_permutation_decompose(A, pivot_rtol=PIVOT_RTOL):
    """Decompose A into a leading exchange, 2n Hankel factors and n permutations.

    Obtained from the Toeplitz chain by absorbing exchange matrices:
    odd-position Toeplitz factors satisfy T = P H (so H = P T), even-position
    ones T = H P (so H = T P), and each interleaved permutation becomes
    P' = P_exch P P_exch except the last, which becomes P_exch P.
    """
    n, pairs, perms = _split_chain_pieces(A, pivot_rtol)
    exch = exchange_permutation(n)
    factors = []
    for idx, ((W, V), P) in enumerate(zip(pairs, perms)):
        H_odd = hankel_from_toeplitz(W, side="left")
        H_even = hankel_from_toeplitz(V, side="right")
        if idx == len(pairs) - 1:
            P_mod = exch.compose(P)
        else:
            P_mod = exch.compose(P).compose(exch)
        factors.extend([H_odd, H_even, P_mod])
    return FactorChain(n, tuple(factors), leading_permutation=exch)
