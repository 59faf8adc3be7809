"""Wall-clock benchmarks for the decomposition pipelines.

Rows come back as dicts with keys ``task``, ``n``, ``backend`` and
``seconds``; the CLI prints them as a tab-separated table. The
elimination decomposition is timed under every available kernel backend
so the compiled and fallback paths can be compared directly.
"""

import time

import numpy as np

from . import kernels
from .fastmul import toeplitz_matvec
from .gedecomp import toeplitz_permutation_decompose
from .generate import complex_normal, generate_matrix, rng_from_seed
from .minimal import GaussNewtonConfig, gauss_newton_decompose, minimal_factor_count
from .structmat import ToeplitzSpec, densify

__all__ = ["GE_SIZES", "run_benchmarks", "format_table"]

GE_SIZES = (64, 128, 256, 512)
GAUSS_NEWTON_SIZES = tuple(range(2, 9))
MATVEC_SIZE = 4096


def _time(fn, repeats=1):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_benchmarks(max_n, seed):
    """Benchmark rows for decomposition, solver and matvec tasks."""
    if max_n < 64:
        raise ValueError("max_n must be at least 64")
    rows = []
    saved = kernels.active_backend()
    try:
        for backend in kernels.available_backends():
            kernels.set_backend(backend)
            for n in (s for s in GE_SIZES if s <= max_n):
                A = generate_matrix(n, (seed, n), "generic")
                toeplitz_permutation_decompose(A)  # warm up jit outside the clock
                seconds = _time(lambda: toeplitz_permutation_decompose(A))
                rows.append({"task": "ge-decompose", "n": n,
                             "backend": backend, "seconds": seconds})
    finally:
        kernels.set_backend(saved)

    for n in GAUSS_NEWTON_SIZES:
        A = generate_matrix(n, (seed, 7, n), "generic")
        cfg = GaussNewtonConfig(seed=(seed, 7, n))
        seconds = _time(lambda: gauss_newton_decompose(A, minimal_factor_count(n), cfg))
        rows.append({"task": "gauss-newton", "n": n,
                     "backend": "numpy", "seconds": seconds})

    n = MATVEC_SIZE
    rng = rng_from_seed((seed, 11))
    spec = ToeplitzSpec(n, complex_normal(rng, 2 * n - 1))
    x = complex_normal(rng, n)
    dense = densify(spec)
    rows.append({"task": "matvec-dense", "n": n, "backend": "numpy",
                 "seconds": _time(lambda: dense @ x, repeats=3)})
    rows.append({"task": "matvec-fft", "n": n, "backend": "numpy",
                 "seconds": _time(lambda: toeplitz_matvec(spec, x), repeats=3)})
    return rows


def format_table(rows):
    lines = ["task\tn\tbackend\tseconds"]
    for row in rows:
        lines.append(f"{row['task']}\t{row['n']}\t{row['backend']}\t{row['seconds']:.6f}")
    return "\n".join(lines) + "\n"
