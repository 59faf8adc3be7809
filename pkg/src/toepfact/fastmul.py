"""Fast products with structured matrices.

``toeplitz_matvec`` embeds the Toeplitz matrix in a circulant of
power-of-two order and multiplies through the FFT in O(n log n).
``upper_toeplitz_inverse`` inverts an upper-triangular Toeplitz matrix in
O(n^2) by the truncated power-series reciprocal of its diagonal
generating polynomial (upper-triangular Toeplitz matrices form an algebra
isomorphic to polynomials mod x^n).
"""

import numpy as np

from . import kernels
from .errors import SingularFactorError
from .structmat import ToeplitzSpec

__all__ = ["toeplitz_matvec", "upper_toeplitz_inverse"]

SINGULARITY_RTOL = 1e-12


def _fft_length(n):
    m = 1
    while m < 2 * n - 1:
        m *= 2
    return m


def toeplitz_matvec(t, x):
    """Product dense(t) @ x without forming the dense matrix.

    Matches the dense product to a relative error of about machine
    epsilon times log n.
    """
    if not isinstance(t, ToeplitzSpec):
        raise TypeError("expected a ToeplitzSpec")
    x = np.asarray(x, dtype=np.complex128)
    n = t.n
    if x.shape != (n,):
        raise ValueError(f"vector length {x.shape} does not match dimension {n}")
    m = _fft_length(n)
    # first column of the circulant: c[s] = value on diagonal -s, wrapped
    c = np.zeros(m, dtype=np.complex128)
    c[:n] = t.diag[n - 1::-1]
    if n > 1:
        c[m - n + 1:] = t.diag[n:][::-1]
    xp = np.zeros(m, dtype=np.complex128)
    xp[:n] = x
    y = np.fft.ifft(np.fft.fft(c) * np.fft.fft(xp))
    return y[:n]


def upper_toeplitz_inverse(w):
    """Inverse of an upper-triangular Toeplitz matrix, as a spec.

    The lower diagonals of ``w`` must be exactly zero. Raises
    ``SingularFactorError`` when the main-diagonal value is below
    ``SINGULARITY_RTOL`` times the largest stored value.
    """
    if not isinstance(w, ToeplitzSpec):
        raise TypeError("expected a ToeplitzSpec")
    n = w.n
    if np.any(w.diag[:n - 1] != 0):
        raise ValueError("matrix has entries below the main diagonal")
    upper = w.diag[n - 1:]
    scale = float(np.max(np.abs(upper)))
    if abs(upper[0]) < SINGULARITY_RTOL * max(scale, 1e-300):
        raise SingularFactorError(
            "upper-triangular Toeplitz factor is numerically singular")
    diag = np.zeros(2 * n - 1, dtype=np.complex128)
    diag[n - 1:] = kernels.ut_reciprocal(np.ascontiguousarray(upper))
    return ToeplitzSpec(n, diag)
