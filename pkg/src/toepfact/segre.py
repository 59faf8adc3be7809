"""Linear-quadratic systems cutting out two-factor decompositions.

A pair of Toeplitz matrices is determined by its two coefficient vectors
in C^{2n-1}; the product depends only on their outer product Z, a
(2n-1) x (2n-1) matrix of coordinates z_{k,m}. Membership of Z in the
set of rank-one matrices is cut out by the vanishing of all 2x2 minors
(quadratic equations), and the requirement that the pair multiplies to a
given A is linear in Z: entry (i, j) of the product is the sum of z_{k,m}
over k + m = j - i within the index window allowed by the factor sizes.

Solving the combined system with an external algebra or homotopy package
is an alternative to ``gauss_newton_decompose``; ``export_system`` writes
the polynomials in a deterministic plain-text form for that purpose.
"""

from dataclasses import dataclass

import numpy as np

from .structmat import ToeplitzSpec, as_square_matrix

__all__ = [
    "LinearQuadraticSystem",
    "build_linear_quadratic_system",
    "variable_index",
    "rank_one_coordinates",
    "linear_values",
    "quadratic_values",
    "export_system",
]


@dataclass(frozen=True, eq=False)
class LinearQuadraticSystem:
    """Linear rows C x = d plus quadratic forms x^T E_j x = 0.

    Each quadratic is stored sparsely as monomial triples (i, j, coeff)
    meaning coeff * x[i] * x[j]; the symmetric matrix realization places
    coeff/2 at positions (i, j) and (j, i).
    """

    num_unknowns: int
    var_names: tuple
    C: np.ndarray
    d: np.ndarray
    quadratics: tuple

    def __post_init__(self):
        C = np.asarray(self.C, dtype=np.complex128)
        d = np.asarray(self.d, dtype=np.complex128)
        if C.ndim != 2 or C.shape[1] != self.num_unknowns:
            raise ValueError("linear matrix shape does not match unknown count")
        if d.shape != (C.shape[0],):
            raise ValueError("right-hand side length does not match linear rows")
        if len(self.var_names) != self.num_unknowns:
            raise ValueError("need one variable name per unknown")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "quadratics", tuple(tuple(q) for q in self.quadratics))

    @property
    def num_linear(self):
        return self.C.shape[0]

    @property
    def num_quadratic(self):
        return len(self.quadratics)


def variable_index(n, k, m):
    """Flat index of the coordinate z_{k,m}, offsets in [-(n-1), n-1]."""
    p = 2 * n - 1
    if not (-n < k < n and -n < m < n):
        raise ValueError(f"offsets ({k}, {m}) out of range for dimension {n}")
    return (k + n - 1) * p + (m + n - 1)


def build_linear_quadratic_system(A, r=2):
    """System whose solutions are two-factor Toeplitz decompositions of A.

    Only r = 2 admits this single-matrix flattening; larger factor counts
    need the order-r tensor analogue, for which use
    ``gauss_newton_decompose`` instead.
    """
    if r != 2:
        raise ValueError(
            f"flattened system supports r=2 only (got r={r}); "
            "use gauss_newton_decompose for other factor counts")
    A = as_square_matrix(A)
    n = A.shape[0]
    p = 2 * n - 1
    num = p * p
    names = tuple(f"z_{k}_{m}"
                  for k in range(-(n - 1), n)
                  for m in range(-(n - 1), n))
    C = np.zeros((n * n, num), dtype=np.complex128)
    d = np.zeros(n * n, dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            row = i * n + j
            d[row] = A[i, j]
            for k in range(-i, n - i):
                C[row, variable_index(n, k, j - i - k)] = 1.0
    quadratics = []
    offsets = range(-(n - 1), n)
    for k1 in offsets:
        for k2 in offsets:
            if k2 <= k1:
                continue
            for m1 in offsets:
                for m2 in offsets:
                    if m2 <= m1:
                        continue
                    quadratics.append((
                        (variable_index(n, k1, m1), variable_index(n, k2, m2), 1.0),
                        (variable_index(n, k1, m2), variable_index(n, k2, m1), -1.0),
                    ))
    return LinearQuadraticSystem(num, names, C, d, tuple(quadratics))


def rank_one_coordinates(t1, t2):
    """Flattened outer product of two Toeplitz coefficient vectors."""
    if not (isinstance(t1, ToeplitzSpec) and isinstance(t2, ToeplitzSpec)):
        raise TypeError("expected ToeplitzSpec factors")
    if t1.n != t2.n:
        raise ValueError("dimension mismatch")
    return np.outer(t1.diag, t2.diag).reshape(-1)


def linear_values(system, x):
    return system.C @ np.asarray(x, dtype=np.complex128)


def quadratic_values(system, x):
    x = np.asarray(x, dtype=np.complex128)
    vals = np.empty(system.num_quadratic, dtype=np.complex128)
    for q_idx, q in enumerate(system.quadratics):
        vals[q_idx] = sum(coeff * x[i] * x[j] for i, j, coeff in q)
    return vals


def _format_complex_coeff(z):
    return f"({z.real:.17g}{z.imag:+.17g}*I)"


def _format_term(coeff, mono):
    if not mono:
        return _format_complex_coeff(complex(coeff))
    if coeff == 1.0:
        return mono
    if coeff == -1.0:
        return f"-{mono}"
    return f"{_format_complex_coeff(complex(coeff))}*{mono}"


def export_system(system, format="text"):
    """Deterministic plain-text listing, one polynomial per line.

    Quadratic equations come first, then the linear ones; every line is
    a polynomial whose vanishing is asserted. Identical systems export
    byte-identically.
    """
    if format != "text":
        raise ValueError(f"unsupported export format {format!r}")
    names = system.var_names
    lines = []
    for q in system.quadratics:
        terms = [_format_term(coeff, f"{names[i]}*{names[j]}") for i, j, coeff in q]
        lines.append(_join_terms(terms))
    for row in range(system.num_linear):
        terms = [
            _format_term(system.C[row, col], names[col])
            for col in np.nonzero(system.C[row])[0]
        ]
        rhs = system.d[row]
        if rhs != 0 or not terms:
            terms.append(_format_term(-rhs, ""))
        lines.append(_join_terms(terms))
    return "\n".join(lines) + "\n"


def _join_terms(terms):
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += f" - {t[1:]}"
        else:
            out += f" + {t}"
    return out
