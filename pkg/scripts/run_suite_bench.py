#!/usr/bin/env python3
"""Run the built-in benchmark suite and write the bandwidth sweep CSV.

Equivalent to `tlang bench --suite`, packaged as a direct experiment driver:

    python3 scripts/run_suite_bench.py --out suite_bench.csv
    python3 scripts/run_suite_bench.py --quick --modes both
"""

from __future__ import annotations

import argparse
import sys

from tlang.bench import DEFAULT_GRIDS, builtin_suite, sweep, write_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="-", help="CSV path, - for stdout")
    parser.add_argument("--grids", type=int, nargs="+", default=list(DEFAULT_GRIDS))
    parser.add_argument("--reps", type=int, default=21)
    parser.add_argument(
        "--modes",
        choices=("whole", "per-component", "both"),
        default="whole",
    )
    parser.add_argument(
        "--quick", action="store_true", help="small grids and few repetitions"
    )
    args = parser.parse_args()

    grids = [32, 256, 2048] if args.quick else args.grids
    reps = 5 if args.quick else args.reps
    modes = {
        "whole": ("whole-tensor",),
        "per-component": ("per-component",),
        "both": ("whole-tensor", "per-component"),
    }[args.modes]

    results = sweep(builtin_suite(), grids, modes=modes, reps=reps)
    if args.out == "-":
        write_csv(results, sys.stdout)
    else:
        with open(args.out, "w") as fp:
            write_csv(results, fp)
        print(f"{len(results)} rows -> {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
