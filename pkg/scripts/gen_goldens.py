#!/usr/bin/env python3
"""Regenerate the checked-in golden sources under tests/goldens/.

Run after any deliberate code-generator change, then review the diff:

    python3 scripts/gen_goldens.py
"""

from __future__ import annotations

import sys
from pathlib import Path

from tlang.bench import builtin_suite, contraction_demos, suite_program_text
from tlang.ir import validate_statement
from tlang.parser import parse_program
from tlang.registry import Registry

GOLDEN_ROOT = Path(__file__).resolve().parent.parent / "tests" / "goldens"


def registry_for(source: str) -> Registry:
    result = parse_program(source)
    if result.diagnostics:
        raise SystemExit(f"golden source failed to parse: {result.diagnostics}")
    registry = Registry()
    for stmt in result.program.statements:
        registry.register(validate_statement(stmt, result.program.decls))
    return registry


def main() -> int:
    targets = {
        "suite": suite_program_text(builtin_suite()),
        "demos": suite_program_text(contraction_demos()),
    }
    for name, source in targets.items():
        out_dir = GOLDEN_ROOT / name
        paths = registry_for(source).write_all(out_dir, "both")
        print(f"{name}: {len(paths)} files under {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
