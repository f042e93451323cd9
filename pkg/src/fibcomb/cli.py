"""Command-line front end: values, tables, and the verification suites.

Exit codes: 0 on success (and when every verification check passes), 1 when
a verification check fails, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import sys

from .compositions import ROUTES, triangle
from .convolved import convolved_fib, convolved_table
from .fib import fib
from .formats import FORMATS, render_grid, render_triangle
from .hessenberg import EnumerationBoundError, build_F, build_G, char_poly, det
from .verify import SUITE_NAMES, format_report, run_all, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcomb",
        description=(
            "Exact-integer combinatorics: Fibonacci numbers as Hessenberg "
            "determinants, convolved Fibonacci numbers, and the triangle of "
            "compositions counted by their number of ones."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="Fibonacci number of index n (n >= -1)")
    p.add_argument("n", type=int)

    p = sub.add_parser("convolved", help="convolved Fibonacci number or table")
    p.add_argument("r", type=int, help="convolution order >= 1 (row bound with --table)")
    p.add_argument("m", type=int, help="series index >= 1 (column bound with --table)")
    p.add_argument("--table", action="store_true", help="emit the full r x m table")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--offset", type=int, default=0, help="first index for bfile output")

    p = sub.add_parser("triangle", help="rows 0..n_max of the composition-ones triangle")
    p.add_argument("n_max", type=int)
    p.add_argument("--route", choices=ROUTES, default="formula")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--bound", type=int, default=None, help="override the enumeration cap")
    p.add_argument("--offset", type=int, default=0, help="first index for bfile output")

    p = sub.add_parser("det", help="determinant of the order-n F or G matrix")
    p.add_argument("family", choices=("F", "G"))
    p.add_argument("n", type=int)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the order-n F matrix")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="run identity-verification suites")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--nmax", type=int, default=None, help="override the suite's index bound")
    p.add_argument("--bound", type=int, default=None, help="override enumeration caps")
    p.add_argument("--seed", type=int, default=0, help="seed for the random-table check")
    p.add_argument(
        "--variant",
        choices=("wrong-index",),
        default=None,
        help="compositions only: demonstrate the shifted-constraint counterexample",
    )
    return parser


def _cmd_fib(args: argparse.Namespace) -> int:
    print(fib(args.n))
    return 0


def _cmd_convolved(args: argparse.Namespace) -> int:
    if args.table:
        grid = convolved_table(args.r, args.m)
        print(render_grid(grid, args.format, args.offset), end="")
    else:
        print(convolved_fib(args.r, args.m))
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    rows = triangle(args.n_max, args.route, args.bound)
    print(render_triangle(rows, args.format, args.offset), end="")
    return 0


def _cmd_det(args: argparse.Namespace) -> int:
    build = build_F if args.family == "F" else build_G
    print(det(build(args.n)))
    return 0


def _cmd_charpoly(args: argparse.Namespace) -> int:
    print(char_poly(build_F(args.n)))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        if args.variant is not None:
            raise ValueError("--variant needs --suite compositions")
        reports = run_all(nmax=args.nmax, bound=args.bound, seed=args.seed)
    else:
        reports = [
            run_suite(
                args.suite,
                nmax=args.nmax,
                bound=args.bound,
                seed=args.seed,
                variant=args.variant,
            )
        ]
    for report in reports:
        print(format_report(report))
    return 0 if all(report.passed for report in reports) else 1


_COMMANDS = {
    "fib": _cmd_fib,
    "convolved": _cmd_convolved,
    "triangle": _cmd_triangle,
    "det": _cmd_det,
    "charpoly": _cmd_charpoly,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
