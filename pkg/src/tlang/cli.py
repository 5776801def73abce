"""Command-line front door: check, eval, codegen, bench."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from . import tldf
from .evaluator import EvalError, eval_statement, eval_statement_per_component
from .fields import ScalarField, TensorField
from .ir import ValidationError, validate_statement
from .parser import Program, parse_program, render
from .registry import Registry

EXIT_OK = 0
EXIT_DIAGNOSTICS = 1
EXIT_IO = 2


def _read_source(path: str) -> str | None:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return None


def _load_program(path: str) -> tuple[Program, list] | None:
    """Parse and validate; returns (program, validated statements) or None."""
    text = _read_source(path)
    if text is None:
        return None
    result = parse_program(text)
    if result.diagnostics:
        for d in result.diagnostics:
            print(d.format(path), file=sys.stderr)
        return None
    program = result.program
    validated = []
    failed = False
    for stmt, (line, col) in zip(program.statements, program.statement_positions):
        try:
            validated.append(validate_statement(stmt, program.decls))
        except ValidationError as exc:
            print(f"{path}:{line}:{col}: [{exc.code}] {exc}", file=sys.stderr)
            failed = True
    if failed:
        return None
    return program, validated


def cmd_check(args: argparse.Namespace) -> int:
    if not Path(args.file).exists():
        print(f"{args.file}: no such file", file=sys.stderr)
        return EXIT_IO
    loaded = _load_program(args.file)
    return EXIT_OK if loaded is not None else EXIT_DIAGNOSTICS


def cmd_eval(args: argparse.Namespace) -> int:
    loaded = _load_program(args.file)
    if loaded is None:
        return EXIT_DIAGNOSTICS if Path(args.file).exists() else EXIT_IO
    program, validated = loaded
    try:
        env = dict(tldf.read(args.data))
    except OSError as exc:
        print(f"{args.data}: {exc}", file=sys.stderr)
        return EXIT_IO
    except tldf.TldfError as exc:
        print(f"{args.data}: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTICS

    # declared fields must match the container; absent ones start empty
    for name, shape in program.decls.tensors.items():
        present = env.get(name)
        if present is None:
            env[name] = TensorField(name, shape)
        elif not isinstance(present, TensorField) or present.shape != shape:
            print(
                f"{args.data}: field {name!r} does not match its declaration "
                f"(expected tensor with {shape})",
                file=sys.stderr,
            )
            return EXIT_DIAGNOSTICS
    for name in program.decls.scalar_fields:
        present = env.get(name)
        if present is None:
            env[name] = ScalarField(name)
        elif not isinstance(present, ScalarField):
            print(f"{args.data}: field {name!r} is declared scalar", file=sys.stderr)
            return EXIT_DIAGNOSTICS

    execute = eval_statement_per_component if args.per_component else eval_statement
    try:
        for vstmt in validated:
            execute(vstmt, env)
    except EvalError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTICS
    try:
        tldf.write(args.out, env)
    except OSError as exc:
        print(f"{args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_codegen(args: argparse.Namespace) -> int:
    loaded = _load_program(args.file)
    if loaded is None:
        return EXIT_DIAGNOSTICS if Path(args.file).exists() else EXIT_IO
    _, validated = loaded
    if not validated:
        print("nothing to generate: the program has no statements", file=sys.stderr)
        return EXIT_DIAGNOSTICS
    registry = Registry()
    for vstmt in validated:
        registry.register(vstmt)
    try:
        paths = registry.write_all(args.out_dir, args.backend)
    except RuntimeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    manifest = next(p for p in paths if p.name.endswith(".tsv"))
    print(manifest)
    return EXIT_OK


def _file_entries(program: Program, validated: list) -> list[bench_mod.SuiteEntry]:
    from .parser import ConstDecl, FieldDecl, IndexDecl, TensorDecl, render_statement

    decl_items = [
        it for it in program.items if isinstance(it, (TensorDecl, FieldDecl, ConstDecl, IndexDecl))
    ]
    decl_program = Program(items=decl_items)
    decl_text = render(decl_program)
    entries = []
    for n, vstmt in enumerate(validated, start=1):
        name = f"s{n}_{vstmt.stmt.lhs.field}"
        entries.append(
            bench_mod.SuiteEntry(name, decl_text + render_statement(vstmt.stmt) + "\n")
        )
    return entries


def cmd_bench(args: argparse.Namespace) -> int:
    if args.file:
        loaded = _load_program(args.file)
        if loaded is None:
            return EXIT_DIAGNOSTICS if Path(args.file).exists() else EXIT_IO
        program, validated = loaded
        if not validated:
            print("nothing to benchmark: the program has no statements", file=sys.stderr)
            return EXIT_DIAGNOSTICS
        entries = _file_entries(program, validated)
    else:
        entries = bench_mod.builtin_suite()
    grids = args.grids or list(bench_mod.DEFAULT_GRIDS)
    modes = {
        "whole": ("whole-tensor",),
        "per-component": ("per-component",),
        "both": ("whole-tensor", "per-component"),
    }[args.mode]
    results = bench_mod.sweep(entries, grids, modes=modes, reps=args.reps, seed=args.seed)
    writer = bench_mod.write_json if args.json else bench_mod.write_csv
    try:
        if args.csv == "-":
            writer(results, sys.stdout)
        else:
            with open(args.csv, "w") as out:
                writer(results, out)
    except OSError as exc:
        print(f"{args.csv}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tlang", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate a source file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="execute a program over a TLDF container")
    p.add_argument("file")
    p.add_argument("--data", required=True, help="input TLDF container")
    p.add_argument("--out", required=True, help="output TLDF container")
    p.add_argument("--per-component", action="store_true", help="one grid pass per component")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("codegen", help="emit kernel/dispatch/bindings sources")
    p.add_argument("file")
    p.add_argument("--backend", choices=("c", "cuda", "both"), default="c")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_codegen)

    p = sub.add_parser("bench", help="run the bandwidth benchmark sweep")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--suite", action="store_true", help="built-in suite (default)")
    group.add_argument(
        "--file",
        help="benchmark a source file; each statement runs independently on freshly seeded fields",
    )
    p.add_argument("--grids", type=int, nargs="+", help="gridsizes (default 32..65536)")
    p.add_argument("--csv", default="-", help="output path, - for stdout")
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.add_argument("--mode", choices=("whole", "per-component", "both"), default="whole")
    p.add_argument("--reps", type=int, default=21)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=bench_mod.DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
