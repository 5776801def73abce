#!/usr/bin/env python3
"""Write benchmark-suite fixture files for differential testing.

Produces, under --out-dir:
    suite.tl         combined program with all fourteen suite statements
    suite_in.tldf    seeded input fields (targets zero-filled at the gridsize)
    identity.tl      the rank-1 assignment statement alone
    identity_in.tldf its fields

Expected outputs come from `tlang eval` on these fixtures.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from tlang import tldf
from tlang.bench import DEFAULT_SEED, builtin_suite, make_env, suite_program_text


def build_fixture(entries, gridsize: int, seed: int):
    env = {}
    for entry in entries:
        program, vstmt = entry.parse()
        env.update(make_env(program, vstmt.stmt.lhs.field, gridsize, seed))
    return env


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--gridsize", type=int, default=64)
    parser.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    suite = builtin_suite()

    (out / "suite.tl").write_text(suite_program_text(suite))
    tldf.write(out / "suite_in.tldf", build_fixture(suite, args.gridsize, args.seed))

    identity = suite[:1]
    (out / "identity.tl").write_text(suite_program_text(identity))
    tldf.write(out / "identity_in.tldf", build_fixture(identity, args.gridsize, args.seed))

    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
