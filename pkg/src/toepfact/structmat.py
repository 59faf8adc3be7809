"""Structured matrix values and their dense realizations.

Conventions used throughout the package:

* dense matrices are square row-major ``complex128`` numpy arrays;
* a Toeplitz matrix is stored as its 2n-1 diagonal values ``diag``, where
  ``diag[k + n - 1]`` is the constant value on the diagonal ``j - i = k``
  (0-based indices; ``k > 0`` lies above the main diagonal);
* a Hankel matrix is stored as its 2n-1 anti-diagonal values ``anti``,
  where ``anti[i + j]`` is the constant value on the anti-diagonal through
  entry ``(i, j)``;
* a permutation maps basis vector ``e_j`` to ``e_{perm[j]}``: the dense
  matrix has its 1 for column ``j`` in row ``perm[j]``.

All spec types are immutable after construction and reject non-finite
entries, so they are safe to share between threads.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ToeplitzSpec",
    "HankelSpec",
    "PermutationSpec",
    "FactorChain",
    "factor_tag",
    "as_square_matrix",
    "shift_basis",
    "densify",
    "dense_product",
    "relative_residual",
    "toeplitz_from_dense",
    "hankel_from_dense",
    "toeplitz_deviation",
    "hankel_deviation",
    "circulant_deviation",
]


def _frozen_complex_vector(values, length, what):
    arr = np.asarray(values, dtype=np.complex128)
    if arr.shape != (length,):
        raise ValueError(f"{what} must have shape ({length},), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains non-finite entries")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


def as_square_matrix(A):
    """Validate and return ``A`` as a square complex128 array."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix contains non-finite entries")
    return M


@dataclass(frozen=True, eq=False)
class ToeplitzSpec:
    """A Toeplitz matrix stored by its 2n-1 diagonal values."""

    n: int
    diag: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        object.__setattr__(
            self, "diag",
            _frozen_complex_vector(self.diag, 2 * self.n - 1, "diag"))

    def value(self, k):
        """Value on diagonal j - i = k."""
        return self.diag[k + self.n - 1]


@dataclass(frozen=True, eq=False)
class HankelSpec:
    """A Hankel matrix stored by its 2n-1 anti-diagonal values."""

    n: int
    anti: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        object.__setattr__(
            self, "anti",
            _frozen_complex_vector(self.anti, 2 * self.n - 1, "anti"))


@dataclass(frozen=True, eq=False)
class PermutationSpec:
    """A permutation matrix; column j carries its 1 in row perm[j]."""

    n: int
    perm: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.perm, dtype=np.intp)
        if p.shape != (self.n,):
            raise ValueError(f"perm must have shape ({self.n},)")
        if not np.array_equal(np.sort(p), np.arange(self.n)):
            raise ValueError("perm is not a bijection on 0..n-1")
        p = p.copy()
        p.flags.writeable = False
        object.__setattr__(self, "perm", p)

    def compose(self, other):
        """Permutation whose matrix is self's times other's."""
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return PermutationSpec(self.n, self.perm[other.perm])


@dataclass(frozen=True, eq=False)
class FactorChain:
    """An ordered product of structured factors.

    Evaluation is the left-to-right dense product, preceded by
    ``leading_permutation`` when present.
    """

    n: int
    factors: tuple
    leading_permutation: PermutationSpec | None = field(default=None)

    def __post_init__(self):
        factors = tuple(self.factors)
        for f in factors:
            if not isinstance(f, (ToeplitzSpec, HankelSpec, PermutationSpec)):
                raise TypeError(f"unsupported factor type {type(f).__name__}")
            if f.n != self.n:
                raise ValueError("all factors must share the chain dimension")
        if self.leading_permutation is not None and self.leading_permutation.n != self.n:
            raise ValueError("leading permutation dimension mismatch")
        object.__setattr__(self, "factors", factors)

    def count_by_kind(self):
        counts = {"toeplitz": 0, "hankel": 0, "permutation": 0}
        for f in self.factors:
            counts[factor_tag(f)] += 1
        return counts


def factor_tag(factor):
    if isinstance(factor, ToeplitzSpec):
        return "toeplitz"
    if isinstance(factor, HankelSpec):
        return "hankel"
    if isinstance(factor, PermutationSpec):
        return "permutation"
    raise TypeError(f"unsupported factor type {type(factor).__name__}")


def shift_basis(k, n):
    """Basis Toeplitz matrix with 1s on diagonal j - i = k, 0 elsewhere.

    k = 0 gives the identity; negating k transposes. Raises if |k| >= n.
    """
    if abs(k) >= n:
        raise ValueError(f"shift offset {k} out of range for dimension {n}")
    diag = np.zeros(2 * n - 1, dtype=np.complex128)
    diag[k + n - 1] = 1.0
    return ToeplitzSpec(n, diag)


def _toeplitz_index(n):
    # entry (i, j) reads diag[(j - i) + n - 1]
    j = np.arange(n)
    return j[None, :] - j[:, None] + n - 1


def _hankel_index(n):
    j = np.arange(n)
    return j[None, :] + j[:, None]


def densify(spec):
    """Dense complex matrix realizing a structured spec."""
    if isinstance(spec, ToeplitzSpec):
        return spec.diag[_toeplitz_index(spec.n)]
    if isinstance(spec, HankelSpec):
        return spec.anti[_hankel_index(spec.n)]
    if isinstance(spec, PermutationSpec):
        M = np.zeros((spec.n, spec.n), dtype=np.complex128)
        M[spec.perm, np.arange(spec.n)] = 1.0
        return M
    raise TypeError(f"cannot densify {type(spec).__name__}")


def dense_product(chain):
    """Evaluate a factor chain as a dense matrix."""
    if not chain.factors:
        raise ValueError("cannot evaluate an empty chain")
    mats = [densify(f) for f in chain.factors]
    if chain.leading_permutation is not None:
        mats.insert(0, densify(chain.leading_permutation))
    out = mats[0]
    for M in mats[1:]:
        out = out @ M
    return out


def relative_residual(X, A):
    """Frobenius residual of X against A, relative to ||A||_F.

    Falls back to the absolute norm ||X||_F when A is the zero matrix.
    """
    denom = np.linalg.norm(A)
    if denom == 0.0:
        return float(np.linalg.norm(X))
    return float(np.linalg.norm(X - A) / denom)


def toeplitz_deviation(A):
    """Largest absolute spread within any diagonal of ``A``."""
    A = as_square_matrix(A)
    n = A.shape[0]
    spec = ToeplitzSpec(n, np.concatenate([A[::-1, 0], A[0, 1:]]))
    return float(np.max(np.abs(A - densify(spec))))


def hankel_deviation(A):
    """Largest absolute spread within any anti-diagonal of ``A``."""
    A = as_square_matrix(A)
    n = A.shape[0]
    spec = HankelSpec(n, np.concatenate([A[0, :], A[1:, -1]]))
    return float(np.max(np.abs(A - densify(spec))))


def circulant_deviation(A):
    """Largest absolute spread within any wrap-around diagonal of ``A``."""
    A = as_square_matrix(A)
    n = A.shape[0]
    col = A[:, 0]
    j = np.arange(n)
    fit = col[(j[:, None] - j[None, :]) % n]
    return float(np.max(np.abs(A - fit)))


def toeplitz_from_dense(A, tol=1e-10):
    """Read a ToeplitzSpec off a dense matrix.

    The deviation from exact Toeplitz structure must not exceed ``tol``
    relative to the largest entry magnitude.
    """
    A = as_square_matrix(A)
    scale = max(float(np.max(np.abs(A))), 1e-300)
    if toeplitz_deviation(A) > tol * scale:
        raise ValueError("matrix is not Toeplitz within tolerance")
    return ToeplitzSpec(A.shape[0], np.concatenate([A[::-1, 0], A[0, 1:]]))


def hankel_from_dense(A, tol=1e-10):
    """Read a HankelSpec off a dense matrix (see ``toeplitz_from_dense``)."""
    A = as_square_matrix(A)
    scale = max(float(np.max(np.abs(A))), 1e-300)
    if hankel_deviation(A) > tol * scale:
        raise ValueError("matrix is not Hankel within tolerance")
    return HankelSpec(A.shape[0], np.concatenate([A[0, :], A[1:, -1]]))
