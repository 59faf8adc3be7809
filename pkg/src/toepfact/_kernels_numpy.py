"""Pure-numpy implementations of the hot kernels.

These are the reference implementations; ``_kernels_numba`` compiles the
same algorithms with ``@njit``. Both are exercised by the parity tests.
"""

import numpy as np


def ut_reciprocal(c):
    """Truncated reciprocal of the polynomial c[0] + c[1] x + ... mod x^n.

    c[0] must be nonzero (callers enforce the singularity threshold).
    """
    n = c.shape[0]
    v = np.zeros(n, dtype=np.complex128)
    v[0] = 1.0 / c[0]
    for k in range(1, n):
        v[k] = -np.dot(c[1:k + 1], v[k - 1::-1]) / c[0]
    return v


def ge_stage_vectors(A, pivot_tol):
    """Column vectors of the elementary factorization of ``A``.

    Returns ``(V, fail_stage)`` where column k of ``V`` is the k-th
    elementary vector and ``fail_stage`` is the 0-based stage whose pivot
    fell below ``pivot_tol`` (absolute), or -1 on success. On failure the
    columns from ``fail_stage`` on are unspecified.
    """
    n = A.shape[0]
    M = A.astype(np.complex128, copy=True)
    V = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        piv = M[k, k]
        if abs(piv) < pivot_tol:
            return V, k
        v = M[:, k].copy()
        v[k] -= 1.0
        V[:, k] = v
        # (I + v e_k^T)^{-1} applied on the left is a rank-one update
        M -= np.outer(v, M[k, :] / piv)
    return V, -1


def ge_stage_vectors_pivoted(A, pivot_tol, first_col):
    """Column-pivoted variant of ``ge_stage_vectors``.

    Eliminates the columns of ``A`` in an adaptive order: position k takes
    the not-yet-eliminated column with the largest stage-k pivot (stage 0
    uses ``first_col``, chosen by the caller). Returns ``(V, cols,
    fail_stage)`` with ``cols[k]`` the original column index placed at
    position k, so the recorded vectors factor ``A @ Q`` where Q maps
    ``e_k`` to ``e_{cols[k]}``.
    """
    n = A.shape[0]
    M = A.astype(np.complex128, copy=True)
    V = np.zeros((n, n), dtype=np.complex128)
    cols = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    for k in range(n):
        if k == 0:
            c = first_col
        else:
            mags = np.abs(M[k, :])
            mags[used] = -1.0
            c = int(np.argmax(mags))
        piv = M[k, c]
        if abs(piv) < pivot_tol:
            return V, cols, k
        cols[k] = c
        used[c] = True
        v = M[:, c].copy()
        v[k] -= 1.0
        V[:, k] = v
        M -= np.outer(v, M[k, :] / piv)
    return V, cols, -1


def greedy_sigma(v, k):
    """Recentering order that keeps the stage polynomial's reciprocal flat.

    Position 1 of the recentered vector must hold ``v[k]``; the remaining
    entries may appear in any order. Assigning them to polynomial
    coefficient slots low-to-high, each pick minimizes the magnitude of
    the next reciprocal coefficient. Returns ``sigma`` with
    ``w = v[sigma]``, ``sigma[0] == k``.
    """
    n = v.shape[0]
    sigma = np.empty(n, dtype=np.int64)
    sigma[0] = k
    if n == 1:
        return sigma
    pool = np.array([i for i in range(n) if i != k], dtype=np.int64)
    size = n - 1
    order = np.empty(n - 1, dtype=np.int64)
    start = int(np.argmax(np.abs(v[pool])))
    order[0] = pool[start]
    # swap-pop keeps pool traversal identical to the compiled backend
    pool[start] = pool[size - 1]
    size -= 1
    c0 = v[order[0]]
    coeffs = np.empty(n - 1, dtype=np.complex128)
    coeffs[0] = c0
    rec = np.empty(n - 1, dtype=np.complex128)
    rec[0] = 1.0 / c0
    for m in range(1, n - 1):
        s = np.dot(coeffs[1:m], rec[m - 1:0:-1]) if m > 1 else 0.0 + 0.0j
        scores = np.abs(s + v[pool[:size]] * rec[0])
        pick = int(np.argmin(scores))
        order[m] = pool[pick]
        coeffs[m] = v[pool[pick]]
        rec[m] = -(s + coeffs[m] * rec[0]) / c0
        pool[pick] = pool[size - 1]
        size -= 1
    sigma[1:] = order[::-1]
    return sigma
