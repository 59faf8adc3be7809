"""Golden inputs and factor data used by several test modules.

The 3x3 and 5x5 cases are fixed worked examples: the factor values are
stored to the precision they were published at (4-7 significant digits),
so product checks against them use loose tolerances, while structural
claims (first-row values of the leading factor, permutation layout) are
exact.
"""

import numpy as np

from toepfact import FactorChain, PermutationSpec, ToeplitzSpec

EXAMPLE_3X3_TARGET = np.array([
    [1.0, 2.0, 3.0],
    [4.0, 5.0, 6.0],
    [7.0, 8.0, 9.0],
], dtype=np.complex128)

EXAMPLE_3X3_FACTORS = (
    np.array([
        [2.2222, 0.8889, -0.4444],
        [3.5556, 2.2222, 0.8889],
        [4.8889, 3.5556, 2.2222],
    ], dtype=np.complex128),
    np.array([
        [0.25, 1.0, 1.0],
        [1.0, 0.25, 1.0],
        [1.0, 1.0, 0.25],
    ], dtype=np.complex128),
)

EXAMPLE_5X5 = np.array([
    [2, 5, 2, 5, 3],
    [4, 5, 5, 2, 2],
    [2, 3, 2, 1, 5],
    [3, 1, 5, 2, 3],
    [4, 1, 2, 4, 3],
], dtype=np.complex128)

EXAMPLE_5X5_T1_FIRST_ROW = np.array([4.0, 3.0, 2.0, 4.0, 1.0])


def toeplitz_from_first_row_col(first_row, first_col):
    """ToeplitzSpec from its first row and first column (equal corners)."""
    v = np.asarray(first_row, dtype=np.complex128)
    w = np.asarray(first_col, dtype=np.complex128)
    n = v.shape[0]
    if v[0] != w[0]:
        raise ValueError("first row and column disagree at the corner")
    return ToeplitzSpec(n, np.concatenate([w[:0:-1], v]))


def _transposition(n, k):
    p = np.arange(n)
    p[0], p[k - 1] = p[k - 1], p[0]
    return PermutationSpec(n, p)


def _interleave(n, toeplitz_rows):
    factors = []
    for k, (v, w) in enumerate(zip(toeplitz_rows[0::2], toeplitz_rows[1::2]), start=1):
        factors.append(toeplitz_from_first_row_col(*v))
        factors.append(toeplitz_from_first_row_col(*w))
        pi_next = _transposition(n, k + 1) if k < n else PermutationSpec(n, np.arange(n))
        factors.append(_transposition(n, k).compose(pi_next))
    return FactorChain(n, tuple(factors))


# first-row / first-column pairs for the ten Toeplitz factors of EXAMPLE_5X5
_EXAMPLE_5X5_ROWS = [
    ([4, 3, 2, 4, 1], [4, 0, 0, 0, 0]),
    ([0.25, -0.1875, 0.015625, -0.16796875, 0.2431640625], [0.25, 0, 0, 0, 1]),
    ([-9, -6.5, -2, 2.5, -6], [-9, 0, 0, 0, 0]),
    ([-0.11111, 0.0802469, -0.0332647, -0.02467230, 0.121575], [-0.11111, 0, 0, 0, 1]),
    ([-3.8, 0.7, 1.5, -0.2, -1.4], [-3.8, 0, 0, 0, 0]),
    ([-0.26316, -0.0484764, -0.112808, -0.026065, 0.050173], [-0.26316, 0, 0, 0, 1]),
    ([16, -4.5, 2, 2, 2.5], [16, 0, 0, 0, 0]),
    ([0.0625, 0.017578, -0.0028687, -0.0108166, -0.014646], [0.0625, 0, 0, 0, 1]),
    ([25.85714, 2.85714, -14.71429, -6.7142857, -76.71429], [25.85714, 0, 0, 0, 0]),
    ([0.038674, -0.004273, 0.02248, 0.00513, 0.125856], [0.038674, 0, 0, 0, 1]),
]


def example_5x5_chain():
    """Golden factor chain multiplying back to EXAMPLE_5X5 (4-6 digit data)."""
    return _interleave(5, _EXAMPLE_5X5_ROWS)
