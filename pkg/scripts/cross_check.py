#!/usr/bin/env python3
"""Run every verification suite and print the per-check report."""

import argparse
import sys

from fibcomb.verify import format_report, run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--nmax", type=int, default=None, help="override every suite's index bound"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for the random-table check"
    )
    args = parser.parse_args()

    reports = run_all(nmax=args.nmax, seed=args.seed)
    for report in reports:
        print(format_report(report))
    failed = [report.suite for report in reports if not report.passed]
    if failed:
        print(f"failing suites: {', '.join(failed)}")
        return 1
    total = sum(len(report.checks) for report in reports)
    elapsed = sum(report.duration for report in reports)
    print(f"all {total} checks passed in {elapsed:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
