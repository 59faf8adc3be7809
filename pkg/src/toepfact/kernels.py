"""Backend dispatch for the hot kernels.

The numba backend is used when importable; set ``TOEPFACT_NUMBA=0`` (or
``false``/``off``) in the environment to force the pure-numpy fallback.
``set_backend`` switches at runtime, which the benchmark harness uses to
compare the two paths in one process.
"""

import os

from . import _kernels_numpy

_IMPLS = {"numpy": _kernels_numpy}
_active = "numpy"


def _try_load_numba():
    try:
        from . import _kernels_numba
    except ImportError:
        return False
    _IMPLS["numba"] = _kernels_numba
    return True


def available_backends():
    """Names of backends usable in this process."""
    backends = ["numpy"]
    if "numba" in _IMPLS or _try_load_numba():
        backends.append("numba")
    return backends


def active_backend():
    return _active


def set_backend(name):
    """Select the kernel backend ("numba" or "numpy")."""
    global _active
    if name == "numba" and "numba" not in _IMPLS and not _try_load_numba():
        raise ValueError("numba backend requested but numba is not importable")
    if name not in _IMPLS:
        raise ValueError(f"unknown backend {name!r}")
    _active = name


def ut_reciprocal(c):
    return _IMPLS[_active].ut_reciprocal(c)


def ge_stage_vectors(A, pivot_tol):
    return _IMPLS[_active].ge_stage_vectors(A, pivot_tol)


def ge_stage_vectors_pivoted(A, pivot_tol, first_col):
    return _IMPLS[_active].ge_stage_vectors_pivoted(A, pivot_tol, first_col)


def greedy_sigma(v, k):
    return _IMPLS[_active].greedy_sigma(v, k)


if os.environ.get("TOEPFACT_NUMBA", "").lower() not in ("0", "false", "off"):
    if _try_load_numba():
        _active = "numba"
