"""Necessary-condition screens for restricted factor classes.

Some subsets of matrices are closed under multiplication, so a product of
factors drawn from them can never leave the subset, no matter how many
factors are used:

* matrices with the half-turn symmetry a[i, j] = a[n-1-i, n-1-j]
  (centrosymmetric matrices) form a subalgebra containing every symmetric
  Toeplitz matrix and every persymmetric Hankel matrix;
* every circulant matrix has the all-ones vector as an eigenvector, and
  eigenvector relations survive products.

``decomposability_screen`` reports which restricted factor classes are
ruled out for a given matrix. The screen is one-sided: it never claims a
decomposition exists.
"""

from dataclasses import dataclass

import numpy as np

from .structmat import as_square_matrix, circulant_deviation, toeplitz_deviation, hankel_deviation

__all__ = [
    "DEFAULT_TOLERANCE",
    "StructureReport",
    "CirculantObstruction",
    "is_centrosymmetric",
    "centrosymmetric_deviation",
    "symmetric_toeplitz_deviation",
    "persymmetric_hankel_deviation",
    "circulant_obstruction",
    "decomposability_screen",
]

DEFAULT_TOLERANCE = 1e-10


def _max_scale(A):
    return max(float(np.max(np.abs(A))), 1e-300)


def centrosymmetric_deviation(A):
    """Largest half-turn symmetry defect, relative to the largest entry."""
    A = as_square_matrix(A)
    return float(np.max(np.abs(A - A[::-1, ::-1]))) / _max_scale(A)


def is_centrosymmetric(A, tol=DEFAULT_TOLERANCE):
    """Flag plus relative deviation for the half-turn symmetry."""
    dev = centrosymmetric_deviation(A)
    return dev <= tol, dev


def symmetric_toeplitz_deviation(A):
    A = as_square_matrix(A)
    dev = max(toeplitz_deviation(A), float(np.max(np.abs(A - A.T))))
    return dev / _max_scale(A)


def persymmetric_hankel_deviation(A):
    """Deviation from Hankel structure with mirror-symmetric anti-diagonals."""
    A = as_square_matrix(A)
    dev = max(hankel_deviation(A), float(np.max(np.abs(A - A[::-1, ::-1].T))))
    return dev / _max_scale(A)


@dataclass(frozen=True)
class CirculantObstruction:
    """Best relative defect of the all-ones eigenvector relation.

    ``zero_image`` marks inputs annihilating the all-ones vector; the
    residual then reports the raw image norm (zero), since eigenvalue 0
    satisfies the relation exactly.
    """

    residual: float
    zero_image: bool


def circulant_obstruction(A):
    """How far the all-ones vector is from being an eigenvector of A.

    A positive residual certifies that A is not a product of circulant
    matrices, for any number of factors.
    """
    A = as_square_matrix(A)
    image = A.sum(axis=1)
    norm = float(np.linalg.norm(image))
    if norm == 0.0:
        return CirculantObstruction(residual=0.0, zero_image=True)
    lam = image.mean()
    residual = float(np.linalg.norm(image - lam) / norm)
    return CirculantObstruction(residual=residual, zero_image=False)


@dataclass(frozen=True)
class StructureReport:
    """Structure detections and ruled-out factor classes for one matrix.

    Deviations are relative to the largest entry magnitude; flags hold
    exactly when the deviation is within the tolerance the report was
    computed with.
    """

    n: int
    tol: float
    is_centrosymmetric: bool
    centrosymmetric_deviation: float
    allones_eigvec_residual: float
    allones_zero_image: bool
    is_symmetric_toeplitz: bool
    symmetric_toeplitz_deviation: float
    is_persymmetric_hankel: bool
    persymmetric_hankel_deviation: float
    is_circulant: bool
    circulant_deviation: float
    rules_out_symmetric_toeplitz_products: bool
    rules_out_persymmetric_hankel_products: bool
    rules_out_circulant_products: bool


def decomposability_screen(A, tol=DEFAULT_TOLERANCE):
    """Report which restricted factor classes are impossible for A.

    Symmetric-Toeplitz products are ruled out when A is not
    centrosymmetric; persymmetric-Hankel products when A is outside the
    exchange-matrix image of the centrosymmetric set (an equivalent
    membership test, since that set absorbs the exchange matrix);
    circulant products when the all-ones vector fails to be an
    eigenvector. Necessary conditions only.
    """
    A = as_square_matrix(A)
    n = A.shape[0]
    scale = _max_scale(A)
    cdev = centrosymmetric_deviation(A)
    # exchange-image membership: P @ A centrosymmetric
    pdev = centrosymmetric_deviation(A[::-1, :])
    obstruction = circulant_obstruction(A)
    circ_dev = circulant_deviation(A) / scale
    st_dev = symmetric_toeplitz_deviation(A)
    ph_dev = persymmetric_hankel_deviation(A)
    return StructureReport(
        n=n,
        tol=tol,
        is_centrosymmetric=cdev <= tol,
        centrosymmetric_deviation=cdev,
        allones_eigvec_residual=obstruction.residual,
        allones_zero_image=obstruction.zero_image,
        is_symmetric_toeplitz=st_dev <= tol,
        symmetric_toeplitz_deviation=st_dev,
        is_persymmetric_hankel=ph_dev <= tol,
        persymmetric_hankel_deviation=ph_dev,
        is_circulant=circ_dev <= tol,
        circulant_deviation=circ_dev,
        rules_out_symmetric_toeplitz_products=cdev > tol,
        rules_out_persymmetric_hankel_products=pdev > tol,
        rules_out_circulant_products=obstruction.residual > tol,
    )
