"""Command-line interface.

Verbs: gen, decompose, verify, rank-cert, export-lq, bench, screen.

Exit codes: 0 success, 1 a requested check failed (residual above
tolerance, certificate failure), 2 non-generic input, 3 solver did not
converge, 4 parse or I/O failure (including bad command lines). Identical
invocations produce byte-identical output; every randomized path requires
an explicit --seed.
"""

import argparse
import sys

import numpy as np

from . import io
from .bench import format_table, run_benchmarks
from .errors import ConvergenceError, FormatError, NonGenericMatrixError
from .gedecomp import hankel_permutation_decompose, toeplitz_permutation_decompose
from .generate import MATRIX_KINDS, generate_matrix
from .minimal import (
    GaussNewtonConfig,
    closed_form_2x2,
    gauss_newton_decompose,
    gauss_newton_hankel_decompose,
    minimal_factor_count,
    rank_certificate,
)
from .segre import build_linear_quadratic_system, export_system
from .guards import decomposability_screen
from .structmat import FactorChain, dense_product, relative_residual

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_NON_GENERIC = 2
EXIT_NO_CONVERGENCE = 3
EXIT_PARSE = 4


class _Parser(argparse.ArgumentParser):
    # usage errors belong to the parse/I-O exit category
    def error(self, message):
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _build_parser():
    parser = _Parser(prog="toepfact",
                     description="Toeplitz and Hankel product decompositions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded test matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kind", choices=MATRIX_KINDS, default="generic")
    p.add_argument("--out", help="output file (stdout when omitted)")

    p = sub.add_parser("decompose", help="factor a matrix into a chain")
    p.add_argument("input", help="matrix file")
    p.add_argument("--method", choices=("ge", "gauss-newton", "closed-form2"),
                   default="ge")
    p.add_argument("--kind", choices=("toeplitz", "hankel"), default="toeplitz")
    p.add_argument("--r", type=int, default=None,
                   help="factor count for gauss-newton (default floor(n/2)+1)")
    p.add_argument("--seed", type=int, default=None,
                   help="required for randomized methods")
    p.add_argument("--tol", type=float, default=None,
                   help="acceptance residual (method-dependent default)")
    p.add_argument("--out", help="chain output file (stdout when omitted)")

    p = sub.add_parser("verify", help="recompute a chain product against a matrix")
    p.add_argument("matrix")
    p.add_argument("chain")
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("rank-cert", help="full-rank certificate of the product map")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("export-lq", help="export the two-factor linear-quadratic system")
    p.add_argument("input", help="matrix file")
    p.add_argument("--out", help="system output file (stdout when omitted)")

    p = sub.add_parser("bench", help="wall-clock benchmarks")
    p.add_argument("--max-n", type=int, default=512)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("screen", help="report factor classes ruled out for a matrix")
    p.add_argument("input", help="matrix file")
    return parser


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _cmd_gen(args):
    A = generate_matrix(args.n, args.seed, args.kind)
    _emit(io.format_matrix(A), args.out)
    return EXIT_OK


def _cmd_decompose(args):
    A = io.read_matrix(args.input)
    n = A.shape[0]
    meta = {"method": args.method}
    if args.method == "ge":
        tol = 1e-10 if args.tol is None else args.tol
        decompose = (toeplitz_permutation_decompose if args.kind == "toeplitz"
                     else hankel_permutation_decompose)
        chain = decompose(A)
        if args.seed is not None:
            meta["seed"] = args.seed
    elif args.method == "gauss-newton":
        if args.seed is None:
            raise FormatError("gauss-newton requires --seed")
        tol = 1e-8 if args.tol is None else args.tol
        r = args.r if args.r is not None else minimal_factor_count(n)
        cfg = GaussNewtonConfig(seed=args.seed, residual_tolerance=tol)
        solve = (gauss_newton_decompose if args.kind == "toeplitz"
                 else gauss_newton_hankel_decompose)
        result = solve(A, r, cfg)
        chain = result.chain()
        meta["seed"] = args.seed
    else:
        if args.kind != "toeplitz":
            raise FormatError("closed-form2 produces Toeplitz factors only")
        if n != 2:
            raise FormatError("closed-form2 requires a 2-by-2 input")
        if args.seed is None:
            raise FormatError("closed-form2 requires --seed")
        tol = 1e-12 if args.tol is None else args.tol
        tup = closed_form_2x2(A, args.seed)
        chain = FactorChain(2, tup.factors)
        meta["seed"] = args.seed
    residual = relative_residual(dense_product(chain), A)
    meta["residual"] = residual
    _emit(io.format_chain(chain, meta), args.out)
    if np.linalg.norm(A) == 0:
        print("note: zero input matrix, residual is absolute", file=sys.stderr)
    return EXIT_OK if residual <= tol else EXIT_CHECK_FAILED


def _cmd_verify(args):
    A = io.read_matrix(args.matrix)
    chain, _meta = io.read_chain(args.chain)
    if chain.n != A.shape[0]:
        raise FormatError(
            f"dimension mismatch: matrix is {A.shape[0]}, chain is {chain.n}")
    residual = relative_residual(dense_product(chain), A)
    absolute = np.linalg.norm(A) == 0
    suffix = " (absolute: zero input matrix)" if absolute else ""
    status = "pass" if residual <= args.tol else "fail"
    print(f"residual {residual:.6e} tol {args.tol:.6e} {status}{suffix}")
    return EXIT_OK if status == "pass" else EXIT_CHECK_FAILED


def _cmd_rank_cert(args):
    report = rank_certificate(args.n, args.seed)
    status = "pass" if report.passed and report.obstruction_ok else "fail"
    print(f"n {report.n} factors {report.r} rank {report.rank} "
          f"required {report.required_rank} "
          f"obstruction {report.obstruction_dim}<{report.required_rank} "
          f"{str(report.obstruction_ok).lower()} {status}")
    return EXIT_OK if status == "pass" else EXIT_CHECK_FAILED


def _cmd_export_lq(args):
    A = io.read_matrix(args.input)
    system = build_linear_quadratic_system(A, r=2)
    _emit(export_system(system), args.out)
    print(f"{system.num_quadratic} quadratic, {system.num_linear} linear",
          file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def _cmd_bench(args):
    rows = run_benchmarks(args.max_n, args.seed)
    sys.stdout.write(format_table(rows))
    return EXIT_OK


def _cmd_screen(args):
    A = io.read_matrix(args.input)
    report = decomposability_screen(A)
    flags = [
        ("centrosymmetric", report.is_centrosymmetric, report.centrosymmetric_deviation),
        ("symmetric-toeplitz", report.is_symmetric_toeplitz, report.symmetric_toeplitz_deviation),
        ("persymmetric-hankel", report.is_persymmetric_hankel, report.persymmetric_hankel_deviation),
        ("circulant", report.is_circulant, report.circulant_deviation),
    ]
    for name, flag, dev in flags:
        print(f"structure {name} {str(flag).lower()} deviation {dev:.6e}")
    print(f"allones-eigvec-residual {report.allones_eigvec_residual:.6e}"
          + (" (zero image)" if report.allones_zero_image else ""))
    ruled = [
        ("symmetric-toeplitz-products", report.rules_out_symmetric_toeplitz_products),
        ("persymmetric-hankel-products", report.rules_out_persymmetric_hankel_products),
        ("circulant-products", report.rules_out_circulant_products),
    ]
    for name, out in ruled:
        print(f"ruled-out {name} {str(out).lower()}")
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "rank-cert": _cmd_rank_cert,
    "export-lq": _cmd_export_lq,
    "bench": _cmd_bench,
    "screen": _cmd_screen,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NonGenericMatrixError as exc:
        print(f"toepfact: non-generic input: {exc}", file=sys.stderr)
        return EXIT_NON_GENERIC
    except ConvergenceError as exc:
        print(f"toepfact: no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except FormatError as exc:
        print(f"toepfact: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"toepfact: invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"toepfact: i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
