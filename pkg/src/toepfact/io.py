"""Text formats for matrices and factor chains.

Matrix files:

    toepfact-matrix v1 <n> <n>
    <n rows of n whitespace-separated complex literals>

Chain files:

    toepfact-chain v1 <n> <factor count>
    meta method <token>          (optional, fixed order: method, seed, residual)
    meta seed <token>
    meta residual <literal>
    leading-permutation <n 1-based images>   (optional)
    toeplitz <2n-1 literals>     (diagonal values, offsets -(n-1)..(n-1))
    hankel <2n-1 literals>       (anti-diagonal values, top-left to bottom-right)
    permutation <n 1-based images>

A complex literal is ``re`` or ``re<sign>im i``, for example ``1.5`` or
``2-0.25i``. Values are written with 17 significant digits so float64
round-trips exactly; serialize-parse-serialize is byte-identical.
"""

import re as _re

import numpy as np

from .errors import FormatError
from .structmat import (
    FactorChain,
    HankelSpec,
    PermutationSpec,
    ToeplitzSpec,
    as_square_matrix,
    factor_tag,
)

__all__ = [
    "format_complex",
    "parse_complex",
    "format_matrix",
    "parse_matrix",
    "read_matrix",
    "write_matrix",
    "format_chain",
    "parse_chain",
    "read_chain",
    "write_chain",
]

MATRIX_HEADER = "toepfact-matrix v1"
CHAIN_HEADER = "toepfact-chain v1"
_META_KEYS = ("method", "seed", "residual")

_COMPLEX_RE = _re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$")


def format_complex(z):
    """17-significant-digit literal for a complex value."""
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real:.17g}"
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex(token, line=None):
    m = _COMPLEX_RE.match(token)
    if m is None:
        raise FormatError(f"bad complex literal {token!r}", line=line)
    re_part = float(m.group("re"))
    im_part = float(m.group("im")) if m.group("im") else 0.0
    return complex(re_part, im_part)


def format_matrix(A):
    A = as_square_matrix(A)
    n = A.shape[0]
    lines = [f"{MATRIX_HEADER} {n} {n}"]
    for row in A:
        lines.append(" ".join(format_complex(z) for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty matrix file", line=1)
    head = lines[0].split()
    if len(head) != 4 or " ".join(head[:2]) != MATRIX_HEADER:
        raise FormatError(f"bad header {lines[0]!r}", line=1)
    try:
        rows, cols = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"bad dimensions in header {lines[0]!r}", line=1) from None
    if rows != cols or rows < 1:
        raise FormatError("matrix must be square with positive dimension", line=1)
    body = [(idx + 2, ln) for idx, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != rows:
        raise FormatError(f"expected {rows} rows, found {len(body)}", line=len(lines))
    A = np.empty((rows, cols), dtype=np.complex128)
    for i, (lineno, ln) in enumerate(body):
        tokens = ln.split()
        if len(tokens) != cols:
            raise FormatError(f"expected {cols} entries, found {len(tokens)}", line=lineno)
        for j, tok in enumerate(tokens):
            A[i, j] = parse_complex(tok, line=lineno)
    return A


def _values_line(values):
    return " ".join(format_complex(z) for z in values)


def format_chain(chain, meta=None):
    meta = meta or {}
    unknown = set(meta) - set(_META_KEYS)
    if unknown:
        raise ValueError(f"unsupported metadata keys {sorted(unknown)}")
    lines = [f"{CHAIN_HEADER} {chain.n} {len(chain.factors)}"]
    for key in _META_KEYS:
        if key in meta:
            value = meta[key]
            if key == "residual":
                value = f"{float(value):.17g}"
            lines.append(f"meta {key} {value}")
    if chain.leading_permutation is not None:
        images = " ".join(str(i + 1) for i in chain.leading_permutation.perm)
        lines.append(f"leading-permutation {images}")
    for f in chain.factors:
        tag = factor_tag(f)
        if tag == "toeplitz":
            lines.append(f"toeplitz {_values_line(f.diag)}")
        elif tag == "hankel":
            lines.append(f"hankel {_values_line(f.anti)}")
        else:
            lines.append("permutation " + " ".join(str(i + 1) for i in f.perm))
    return "\n".join(lines) + "\n"


def _parse_permutation_images(tokens, n, line):
    if len(tokens) != n:
        raise FormatError(f"expected {n} permutation images, found {len(tokens)}", line=line)
    try:
        images = [int(t) - 1 for t in tokens]
    except ValueError:
        raise FormatError("permutation images must be integers", line=line) from None
    if sorted(images) != list(range(n)):
        raise FormatError("permutation images are not a bijection of 1..n", line=line)
    return PermutationSpec(n, np.asarray(images))


def parse_chain(text):
    """Parse a chain file; returns ``(FactorChain, metadata dict)``."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty chain file", line=1)
    head = lines[0].split()
    if len(head) != 4 or " ".join(head[:2]) != CHAIN_HEADER:
        raise FormatError(f"bad header {lines[0]!r}", line=1)
    try:
        n, count = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"bad header counts {lines[0]!r}", line=1) from None
    meta = {}
    factors = []
    leading = None
    for lineno, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        tokens = ln.split()
        kind, rest = tokens[0], tokens[1:]
        if kind == "meta":
            if len(rest) < 2 or rest[0] not in _META_KEYS:
                raise FormatError(f"bad metadata line {ln!r}", line=lineno)
            meta[rest[0]] = " ".join(rest[1:])
        elif kind == "leading-permutation":
            if factors or leading is not None:
                raise FormatError("leading-permutation must appear once, before factors", line=lineno)
            leading = _parse_permutation_images(rest, n, lineno)
        elif kind in ("toeplitz", "hankel"):
            if len(rest) != 2 * n - 1:
                raise FormatError(
                    f"expected {2 * n - 1} values for a {kind} factor, found {len(rest)}",
                    line=lineno)
            values = np.array([parse_complex(t, line=lineno) for t in rest])
            factors.append(ToeplitzSpec(n, values) if kind == "toeplitz"
                           else HankelSpec(n, values))
        elif kind == "permutation":
            factors.append(_parse_permutation_images(rest, n, lineno))
        else:
            raise FormatError(f"unknown line kind {kind!r}", line=lineno)
    if len(factors) != count:
        raise FormatError(f"header promises {count} factors, found {len(factors)}",
                          line=len(lines))
    if "residual" in meta:
        meta["residual"] = float(meta["residual"])
    return FactorChain(n, tuple(factors), leading_permutation=leading), meta


def read_matrix(path):
    return parse_matrix(_read_text(path))


def write_matrix(path, A):
    _write_text(path, format_matrix(A))


def read_chain(path):
    return parse_chain(_read_text(path))


def write_chain(path, chain, meta=None):
    _write_text(path, format_chain(chain, meta))


def _read_text(path):
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(path, text):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
