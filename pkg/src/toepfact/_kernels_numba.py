"""Numba-compiled hot kernels, mirroring ``_kernels_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def ut_reciprocal(c):
    n = c.shape[0]
    v = np.zeros(n, dtype=np.complex128)
    v[0] = 1.0 / c[0]
    for k in range(1, n):
        acc = 0.0 + 0.0j
        for j in range(1, k + 1):
            acc += c[j] * v[k - j]
        v[k] = -acc / c[0]
    return v


@njit(cache=True)
def ge_stage_vectors(A, pivot_tol):
    n = A.shape[0]
    M = A.astype(np.complex128).copy()
    V = np.zeros((n, n), dtype=np.complex128)
    row = np.empty(n, dtype=np.complex128)
    for k in range(n):
        piv = M[k, k]
        if abs(piv) < pivot_tol:
            return V, k
        for i in range(n):
            V[i, k] = M[i, k]
        V[k, k] -= 1.0
        for j in range(n):
            row[j] = M[k, j] / piv
        for i in range(n):
            vi = V[i, k]
            if vi != 0:
                for j in range(n):
                    M[i, j] -= vi * row[j]
    return V, -1


@njit(cache=True)
def ge_stage_vectors_pivoted(A, pivot_tol, first_col):
    n = A.shape[0]
    M = A.astype(np.complex128).copy()
    V = np.zeros((n, n), dtype=np.complex128)
    cols = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    row = np.empty(n, dtype=np.complex128)
    for k in range(n):
        if k == 0:
            c = first_col
        else:
            c = -1
            best = -1.0
            for j in range(n):
                if not used[j]:
                    mag = abs(M[k, j])
                    if mag > best:
                        best = mag
                        c = j
        piv = M[k, c]
        if abs(piv) < pivot_tol:
            return V, cols, k
        cols[k] = c
        used[c] = True
        for i in range(n):
            V[i, k] = M[i, c]
        V[k, k] -= 1.0
        for j in range(n):
            row[j] = M[k, j] / piv
        for i in range(n):
            vi = V[i, k]
            if vi != 0:
                for j in range(n):
                    M[i, j] -= vi * row[j]
    return V, cols, -1


@njit(cache=True)
def greedy_sigma(v, k):
    n = v.shape[0]
    sigma = np.empty(n, dtype=np.int64)
    sigma[0] = k
    if n == 1:
        return sigma
    pool = np.empty(n - 1, dtype=np.int64)
    idx = 0
    for i in range(n):
        if i != k:
            pool[idx] = i
            idx += 1
    size = n - 1
    start = 0
    best = -1.0
    for i in range(size):
        mag = abs(v[pool[i]])
        if mag > best:
            best = mag
            start = i
    order = np.empty(n - 1, dtype=np.int64)
    order[0] = pool[start]
    pool[start] = pool[size - 1]
    size -= 1
    c0 = v[order[0]]
    coeffs = np.empty(n - 1, dtype=np.complex128)
    coeffs[0] = c0
    rec = np.empty(n - 1, dtype=np.complex128)
    rec[0] = 1.0 / c0
    for m in range(1, n - 1):
        s = 0.0 + 0.0j
        for j in range(1, m):
            s += coeffs[j] * rec[m - j]
        pick = 0
        best_score = np.inf
        for i in range(size):
            score = abs(s + v[pool[i]] * rec[0])
            if score < best_score:
                best_score = score
                pick = i
        order[m] = pool[pick]
        coeffs[m] = v[pool[pick]]
        rec[m] = -(s + coeffs[m] * rec[0]) / c0
        pool[pick] = pool[size - 1]
        size -= 1
    for j in range(1, n):
        sigma[j] = order[n - 1 - j]
    return sigma
