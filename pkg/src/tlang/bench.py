"""Effective-bandwidth benchmark harness over the built-in statement suite.

The metric is BW_eff = 8 bytes * (N_e*N + N_d) / t, where N_e counts the
distinct component arrays a statement touches, N_d its bare number literals,
N the gridsize and t the execution time.  Each measurement runs a statement
`reps` times, discards the first run, and reports the median of the rest.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from statistics import median
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from .evaluator import Env, eval_statement, eval_statement_per_component
from .fields import ScalarField, TensorField
from .ir import ValidatedStatement, count_data, validate_statement
from .parser import FieldDecl, Program, TensorDecl, parse_program

DEFAULT_SEED = 0xC0FFEE
DEFAULT_GRIDS = (32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384, 32768, 65536)
MODES = ("whole-tensor", "per-component")

CSV_COLUMNS = ("name", "mode", "N", "t_median_s", "bw_eff_gbps", "N_e", "N_d")


@dataclass(frozen=True)
class BenchResult:
    name: str
    mode: str
    gridsize: int
    t: float  # median seconds
    bw_eff: float  # GB/s
    n_e: int
    n_d: int

    def row(self) -> tuple:
        return (self.name, self.mode, self.gridsize, self.t, self.bw_eff, self.n_e, self.n_d)


def bw_eff(n_e: int, n_d: int, gridsize: int, t: float) -> float:
    """Effective bandwidth in GB/s for a statement executed in t seconds."""
    return 8.0 * (n_e * gridsize + n_d) / t / 1e9


@dataclass(frozen=True)
class SuiteEntry:
    """One benchmark statement: declarations, statement text, target field."""

    name: str
    source: str

    def parse(self) -> tuple[Program, ValidatedStatement]:
        result = parse_program(self.source)
        if result.diagnostics:
            raise ValueError(f"suite entry {self.name!r} failed to parse: {result.diagnostics}")
        program = result.program
        (stmt,) = program.statements
        return program, validate_statement(stmt, program.decls)

    def build_env(self, gridsize: int, seed: int = DEFAULT_SEED) -> tuple[ValidatedStatement, Env]:
        """Fields for one run: uniform (0,1) inputs, zeroed target."""
        program, vstmt = self.parse()
        return vstmt, make_env(program, vstmt.stmt.lhs.field, gridsize, seed)


def make_env(program: Program, target: str, gridsize: int, seed: int = DEFAULT_SEED) -> Env:
    rng = np.random.default_rng(seed)
    env: dict = {}
    for item in program.items:
        if isinstance(item, TensorDecl):
            shape = program.decls.tensors[item.name]
            field = TensorField(item.name, shape, gridsize)
            if item.name != target:
                field.data[:] = rng.uniform(0.0, 1.0, field.data.shape)
            env[item.name] = field
        elif isinstance(item, FieldDecl):
            field = ScalarField(item.name, gridsize)
            if item.name != target:
                field.data[:] = rng.uniform(0.0, 1.0, gridsize)
            env[item.name] = field
    return env


def _entry(name: str, decls: Sequence[str], stmt: str) -> SuiteEntry:
    return SuiteEntry(name, "\n".join([*decls, stmt]) + "\n")


def _vec(prefix: str, names: str) -> list[str]:
    return [f"tensor {prefix}_{n} dim 3 rank 1;" for n in names.split()]


def builtin_suite() -> list[SuiteEntry]:
    """The fourteen benchmark statements, all over dimension-3 indices."""
    entries = [
        _entry(
            "assign1",
            _vec("assign1", "A B"),
            "assign1_A(i) = assign1_B(i);",
        ),
        _entry(
            "assign2",
            ["tensor assign2_A dim 3 rank 2;", "tensor assign2_B dim 3 rank 2;"],
            "assign2_A(i, j) = assign2_B(i, j);",
        ),
        _entry(
            "assign3",
            ["tensor assign3_A dim 3 rank 3;", "tensor assign3_B dim 3 rank 3;"],
            "assign3_A(i, j, k) = assign3_B(i, j, k);",
        ),
        _entry(
            "add1",
            _vec("add1", "A B C"),
            "add1_A(i) = add1_B(i) + add1_C(i);",
        ),
        _entry(
            "add2",
            _vec("add2", "A B C D"),
            "add2_A(i) = add2_B(i) + add2_C(i) + add2_D(i);",
        ),
        _entry(
            "add3",
            _vec("add3", "A B C D E"),
            "add3_A(i) = add3_B(i) + add3_C(i) + add3_D(i) + add3_E(i);",
        ),
        _entry(
            "outer1",
            ["tensor outer1_A dim 3 rank 2;", *_vec("outer1", "B C")],
            "outer1_A(i, j) = outer1_B(i)*outer1_C(j);",
        ),
        _entry(
            "outer2",
            ["tensor outer2_A dim 3 rank 3;", *_vec("outer2", "B C D")],
            "outer2_A(i, j, k) = outer2_B(i)*outer2_C(j)*outer2_D(k);",
        ),
        _entry(
            "outer3",
            ["tensor outer3_A dim 3 rank 4;", *_vec("outer3", "B C D E")],
            "outer3_A(i, j, k, l) = outer3_B(i)*outer3_C(j)*outer3_D(k)*outer3_E(l);",
        ),
        _entry(
            "contract1",
            [
                "tensor contract1_A dim 3 rank 4;",
                "tensor contract1_B dim 3 rank 2;",
                "tensor contract1_E dim 3 rank 4;",
            ],
            "contract1_A(i, j, k, l) = Sum(m, contract1_B(i, m)*contract1_E(m, j, k, l));",
        ),
        _entry(
            "contract2",
            [
                "tensor contract2_A dim 3 rank 4;",
                "tensor contract2_B dim 3 rank 2;",
                "tensor contract2_C dim 3 rank 2;",
                "tensor contract2_E dim 3 rank 4;",
            ],
            "contract2_A(i, j, k, l) = "
            "Sum(m, Sum(n, contract2_C(j, n)*contract2_B(i, m)*contract2_E(m, n, k, l)));",
        ),
        _entry(
            "contract3",
            [
                "tensor contract3_A dim 3 rank 4;",
                "tensor contract3_B dim 3 rank 2;",
                "tensor contract3_C dim 3 rank 2;",
                "tensor contract3_D dim 3 rank 2;",
                "tensor contract3_E dim 3 rank 4;",
            ],
            "contract3_A(i, j, k, l) = Sum(m, Sum(n, Sum(o, "
            "contract3_D(k, o)*contract3_C(j, n)*contract3_B(i, m)*contract3_E(m, n, o, l))));",
        ),
        _entry(
            "kij",
            [
                "tensor kij_K dim 3 rank 2 sym(0,1);",
                "field kij_alpha;",
                "tensor kij_g dim 3 rank 2 sym(0,1);",
                "tensor kij_beta dim 3 rank 1;",
            ],
            "kij_K(sym<0,1>, i, j) = 2*kij_alpha*kij_g(i, j) + kij_beta(i)*kij_beta(j);",
        ),
        _entry(
            "christoffel",
            [
                "tensor christoffel_Gamma dim 3 rank 3 sym(1,2);",
                "tensor christoffel_Invg dim 3 rank 2 sym(0,1);",
                "tensor christoffel_dg dim 3 rank 2 sym(0,1) inner rank 1;",
            ],
            "christoffel_Gamma(sym<1,2>, i, j, k) = 0.5*Sum(l, christoffel_Invg(i, l)"
            "*(christoffel_dg(j, l)(k) + christoffel_dg(l, k)(j) - christoffel_dg(j, k)(l)));",
        ),
    ]
    return entries


def worked_examples() -> list[SuiteEntry]:
    """Dimension-4 fixtures with pinned data-volume counts (42 and 19)."""
    return [
        _entry(
            "sym42",
            [
                "tensor w42_C dim 4 rank 2 sym(0,1);",
                "tensor w42_A dim 4 rank 2;",
                "tensor w42_B dim 4 rank 2;",
            ],
            "w42_C(sym<0,1>, a, b) = Sum(c, w42_A(a, c)*w42_B(c, b));",
        ),
        _entry(
            "fix19",
            [
                "tensor w19_D dim 4 rank 2 sym(0,1);",
                "tensor w19_E dim 4 rank 2;",
                "tensor w19_F dim 4 rank 2;",
            ],
            "w19_D(sym<0,1>, i, 0) = Sum(c, w19_E(i+1, c)*w19_F(c, 0));",
        ),
    ]


def contraction_demos() -> list[SuiteEntry]:
    """Dimension-4 contraction trio exercising plain, symmetric and fixed-index kernels."""
    return [
        _entry(
            "demo_plain",
            [
                "tensor demo_C dim 4 rank 2;",
                "tensor demo_A dim 4 rank 2;",
                "tensor demo_B dim 4 rank 2;",
            ],
            "demo_C(a, b) = Sum(c, demo_A(a, c)*demo_B(c, b));",
        ),
        worked_examples()[0],
        worked_examples()[1],
    ]


def suite_program_text(entries: Iterable[SuiteEntry] | None = None) -> str:
    """One combined program containing every entry's declarations and statement."""
    entries = list(entries) if entries is not None else builtin_suite()
    return "\n".join(e.source for e in entries)


# --- timing -------------------------------------------------------------------


def time_statement(
    vstmt: ValidatedStatement,
    env: Env,
    *,
    reps: int = 21,
    mode: str = "whole-tensor",
    clock: Callable[[], float] = time.perf_counter,
) -> float:
    """Median duration over `reps` runs with the first discarded."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if reps < 2:
        raise ValueError("need at least 2 repetitions: the first is discarded")
    execute = eval_statement if mode == "whole-tensor" else eval_statement_per_component
    samples = []
    for _ in range(reps):
        t0 = clock()
        execute(vstmt, env)
        samples.append(clock() - t0)
    return median(samples[1:])


def run(
    entry: SuiteEntry,
    gridsize: int,
    *,
    reps: int = 21,
    mode: str = "whole-tensor",
    seed: int = DEFAULT_SEED,
    clock: Callable[[], float] = time.perf_counter,
) -> BenchResult:
    if gridsize < 1:
        raise ValueError("gridsize must be positive")
    vstmt, env = entry.build_env(gridsize, seed)
    n_e, n_d = count_data(vstmt)
    t = time_statement(vstmt, env, reps=reps, mode=mode, clock=clock)
    return BenchResult(entry.name, mode, gridsize, t, bw_eff(n_e, n_d, gridsize, t), n_e, n_d)


def sweep(
    entries: Sequence[SuiteEntry],
    gridsizes: Sequence[int] = DEFAULT_GRIDS,
    *,
    modes: Sequence[str] = ("whole-tensor",),
    reps: int = 21,
    seed: int = DEFAULT_SEED,
) -> list[BenchResult]:
    results = []
    for entry in entries:
        for mode in modes:
            for n in gridsizes:
                results.append(run(entry, n, reps=reps, mode=mode, seed=seed))
    return results


def write_csv(results: Iterable[BenchResult], out: TextIO) -> None:
    writer = csv.writer(out)
    writer.writerow(CSV_COLUMNS)
    for r in results:
        writer.writerow([r.name, r.mode, r.gridsize, repr(r.t), repr(r.bw_eff), r.n_e, r.n_d])


def write_json(results: Iterable[BenchResult], out: TextIO) -> None:
    rows = [dict(zip(CSV_COLUMNS, r.row())) for r in results]
    json.dump(rows, out, indent=2)
    out.write("\n")
