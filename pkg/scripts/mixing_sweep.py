#!/usr/bin/env python3
"""Write the default mixing-family sweep as CSV.

Interpolates (1-x)*base + x*target over a uniform grid and records every
bound and criterion margin at each point.  Equivalent to `covmat sweep`
but convenient for piping into a plotting tool.
"""
import argparse
import sys

from covmat.cli import SWEEP_COLUMNS, fmt, sweep_rows, _parse_grid
from covmat.states import build_state


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base", default="bennett3x3")
    ap.add_argument("--target", default="mes:3")
    ap.add_argument("--grid", default="0:1:101")
    ap.add_argument("--out", default="-", help="output CSV path ('-' = stdout)")
    args = ap.parse_args()

    base, target = build_state(args.base), build_state(args.target)
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    try:
        print(",".join(SWEEP_COLUMNS), file=out)
        for row in sweep_rows(base, target, _parse_grid(args.grid)):
            print(",".join(fmt(v) for v in row), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
