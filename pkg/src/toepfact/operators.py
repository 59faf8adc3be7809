"""Entry-rearranging operators: transpose, rotate, swap, flip.

With ``P`` the exchange matrix (1s on the anti-diagonal):

* ``T``: transpose
* ``R``: rotate a quarter turn counter-clockwise, ``P @ A.T`` (the last
  column becomes the first row)
* ``S``: swap columns left-right, ``A @ P``
* ``F``: flip rows top-bottom, ``P @ A``

``S`` and ``F`` are involutions and ``R`` has order four. Rotating,
swapping or flipping a Hankel matrix yields a Toeplitz matrix and vice
versa, which is how the Hankel halves of the decompositions reduce to the
Toeplitz ones.
"""

import numpy as np

from .structmat import HankelSpec, PermutationSpec, ToeplitzSpec, as_square_matrix

__all__ = [
    "apply_operator",
    "exchange_matrix",
    "exchange_permutation",
    "hankel_from_toeplitz",
]


def apply_operator(A, op):
    """Apply one of the operators "T", "R", "S", "F" to a square matrix."""
    A = as_square_matrix(A)
    if op == "T":
        return A.T.copy()
    if op == "R":
        return A.T[::-1, :].copy()
    if op == "S":
        return A[:, ::-1].copy()
    if op == "F":
        return A[::-1, :].copy()
    raise ValueError(f"unknown operator {op!r}, expected one of T, R, S, F")


def exchange_matrix(n):
    """Dense anti-diagonal permutation (the exchange matrix)."""
    return np.eye(n, dtype=np.complex128)[::-1].copy()


def exchange_permutation(n):
    """The exchange matrix as a PermutationSpec."""
    return PermutationSpec(n, np.arange(n)[::-1])


def hankel_from_toeplitz(t, side):
    """Hankel matrix obtained by multiplying ``t`` by the exchange matrix.

    ``side="left"`` returns H with dense(H) = P @ dense(t); ``side="right"``
    returns H with dense(H) = dense(t) @ P. Row reversal maps the diagonal
    j - i = k onto the anti-diagonal i + j = (n - 1) + k, so the stored
    value vectors coincide up to orientation.
    """
    if not isinstance(t, ToeplitzSpec):
        raise TypeError("expected a ToeplitzSpec")
    if side == "left":
        return HankelSpec(t.n, t.diag)
    if side == "right":
        return HankelSpec(t.n, t.diag[::-1])
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
