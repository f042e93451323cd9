#!/usr/bin/env python3
"""Write the composition-ones triangle (rows 0..n_max) as an OEIS-style b-file."""

import argparse

from fibcomb.compositions import ROUTES, triangle
from fibcomb.formats import render_triangle


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n_max", type=int, help="last triangle row")
    parser.add_argument("out", help="output path")
    parser.add_argument("--route", choices=ROUTES, default="formula")
    parser.add_argument("--offset", type=int, default=0, help="index of the first line")
    parser.add_argument("--bound", type=int, default=None, help="enumeration cap override")
    args = parser.parse_args()

    rows = triangle(args.n_max, args.route, args.bound)
    with open(args.out, "w", encoding="ascii") as handle:
        handle.write(render_triangle(rows, "bfile", args.offset))
    print(f"wrote {sum(row.n + 1 for row in rows)} entries to {args.out}")


if __name__ == "__main__":
    main()
