"""Seeded generation of test matrices.

Every randomized path in the package takes an explicit seed; nothing
draws from ambient entropy. Seeds may be ints or tuples of ints (tuples
feed ``numpy.random.default_rng`` as a SeedSequence entropy list, which
is how per-restart streams are derived deterministically).
"""

import numpy as np

__all__ = ["MATRIX_KINDS", "complex_normal", "generate_matrix", "rng_from_seed"]

MATRIX_KINDS = ("generic", "toeplitz", "hankel", "circulant", "centrosym")


def rng_from_seed(seed):
    return np.random.default_rng(seed)


def complex_normal(rng, shape):
    """i.i.d. standard complex normal draws (unit total variance)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def generate_matrix(n, seed, kind="generic"):
    """Deterministic n-by-n complex matrix of the requested kind."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {MATRIX_KINDS}")
    rng = rng_from_seed(seed)
    if kind == "generic":
        return complex_normal(rng, (n, n))
    if kind == "toeplitz":
        diag = complex_normal(rng, 2 * n - 1)
        j = np.arange(n)
        return diag[j[None, :] - j[:, None] + n - 1]
    if kind == "hankel":
        anti = complex_normal(rng, 2 * n - 1)
        j = np.arange(n)
        return anti[j[None, :] + j[:, None]]
    if kind == "circulant":
        col = complex_normal(rng, n)
        j = np.arange(n)
        return col[(j[:, None] - j[None, :]) % n]
    # centrosym: average with the half-turn rotation of the same draw
    X = complex_normal(rng, (n, n))
    return (X + X[::-1, ::-1]) / 2
