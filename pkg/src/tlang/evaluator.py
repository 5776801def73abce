"""Direct execution of validated statements over field data.

This is the reference path: loops over left-hand-side index assignments run
outermost, the grid dimension innermost, and right-hand sides are evaluated in
parse-tree order so floating-point results are deterministic.  Sums expand to
left-associated chains; evaluating an expanded statement is bitwise identical
to evaluating the sum in place.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Mapping

import numpy as np

from .fields import FieldLike, IndexVar, ScalarField, TensorField
from .ir import (
    Add,
    Const,
    Div,
    Expr,
    FieldRef,
    Fixed,
    Leaf,
    Mul,
    Neg,
    Sqrt,
    Sub,
    Sum,
    TensorLeaf,
    ValidatedStatement,
    VarTerm,
    leaf_component,
)


class EvalError(RuntimeError):
    pass


Env = Mapping[str, FieldLike]
Binding = dict[IndexVar, int]


def _lookup(env: Env, name: str):
    try:
        return env[name]
    except KeyError:
        raise EvalError(f"{name!r} is not present in the data environment") from None


def substitute(e: Expr, var: IndexVar, value: int) -> Expr:
    """Replace every free occurrence of `var` by the fixed value `value`."""
    if isinstance(e, Leaf):
        leaf = e.leaf
        outer = tuple(
            Fixed(value + t.offset) if isinstance(t, VarTerm) and t.var == var else t
            for t in leaf.outer
        )
        inner = tuple(
            Fixed(value + t.offset) if isinstance(t, VarTerm) and t.var == var else t
            for t in leaf.inner
        )
        if outer == leaf.outer and inner == leaf.inner:
            return e
        return Leaf(TensorLeaf(leaf.field, outer, inner, leaf.declared_sym))
    if isinstance(e, (Const, FieldRef)):
        return e
    if isinstance(e, Add):
        return Add(substitute(e.l, var, value), substitute(e.r, var, value))
    if isinstance(e, Sub):
        return Sub(substitute(e.l, var, value), substitute(e.r, var, value))
    if isinstance(e, Mul):
        return Mul(substitute(e.l, var, value), substitute(e.r, var, value))
    if isinstance(e, Div):
        return Div(substitute(e.l, var, value), substitute(e.r, var, value))
    if isinstance(e, Neg):
        return Neg(substitute(e.e, var, value))
    if isinstance(e, Sqrt):
        return Sqrt(substitute(e.e, var, value))
    if isinstance(e, Sum):
        if e.var == var:  # inner sum shadows the substituted index
            return e
        return Sum(e.var, substitute(e.body, var, value))
    raise TypeError(f"not an expression node: {e!r}")


def expand_sum(e: Sum) -> Expr:
    """One sum node as the left-associated chain body[0] + body[1] + ..."""
    out = substitute(e.body, e.var, 0)
    for value in range(1, e.var.dim):
        out = Add(out, substitute(e.body, e.var, value))
    return out


def expand_all_sums(e: Expr) -> Expr:
    """Recursively expand every sum node, outermost first."""
    if isinstance(e, Sum):
        return expand_all_sums(expand_sum(e))
    if isinstance(e, Add):
        return Add(expand_all_sums(e.l), expand_all_sums(e.r))
    if isinstance(e, Sub):
        return Sub(expand_all_sums(e.l), expand_all_sums(e.r))
    if isinstance(e, Mul):
        return Mul(expand_all_sums(e.l), expand_all_sums(e.r))
    if isinstance(e, Div):
        return Div(expand_all_sums(e.l), expand_all_sums(e.r))
    if isinstance(e, Neg):
        return Neg(expand_all_sums(e.e))
    if isinstance(e, Sqrt):
        return Sqrt(expand_all_sums(e.e))
    return e


def _leaf_values(leaf: TensorLeaf, env: Env, binding: Binding, v: ValidatedStatement, lo, hi):
    field = _lookup(env, leaf.field)
    o, i = leaf_component(leaf, v.decls.tensor(leaf.field), binding)
    return field.data[o, i, lo:hi]


def _eval(e: Expr, env: Env, binding: Binding, v: ValidatedStatement, lo: int, hi: int):
    """Evaluate over grid points [lo, hi); returns an array or a python float."""
    if isinstance(e, Const):
        return e.value
    if isinstance(e, FieldRef):
        return _lookup(env, e.name).data[lo:hi]
    if isinstance(e, Leaf):
        return _leaf_values(e.leaf, env, binding, v, lo, hi)
    if isinstance(e, Add):
        return _eval(e.l, env, binding, v, lo, hi) + _eval(e.r, env, binding, v, lo, hi)
    if isinstance(e, Sub):
        return _eval(e.l, env, binding, v, lo, hi) - _eval(e.r, env, binding, v, lo, hi)
    if isinstance(e, Mul):
        return _eval(e.l, env, binding, v, lo, hi) * _eval(e.r, env, binding, v, lo, hi)
    if isinstance(e, Div):
        return _eval(e.l, env, binding, v, lo, hi) / _eval(e.r, env, binding, v, lo, hi)
    if isinstance(e, Neg):
        return -_eval(e.e, env, binding, v, lo, hi)
    if isinstance(e, Sqrt):
        return np.sqrt(_eval(e.e, env, binding, v, lo, hi))
    if isinstance(e, Sum):
        acc = _eval(substitute(e.body, e.var, 0), env, binding, v, lo, hi)
        for value in range(1, e.var.dim):
            acc = acc + _eval(substitute(e.body, e.var, value), env, binding, v, lo, hi)
        return acc
    raise TypeError(f"not an expression node: {e!r}")


def _store(field: TensorField, o: int, i: int, op: str, values, lo: int, hi: int) -> None:
    """Combine `values` into one component array slice per the assignment op."""
    if op == "=":
        field.data[o, i, lo:hi] = values
    elif op == "+=":
        field.data[o, i, lo:hi] += values
    elif op == "-=":
        field.data[o, i, lo:hi] -= values
    elif op == "*=":
        field.data[o, i, lo:hi] *= values
    else:
        field.data[o, i, lo:hi] /= values


def _rhs_fields(v: ValidatedStatement, env: Env) -> list[TensorField | ScalarField]:
    from .ir import walk

    seen, out = set(), []
    for node in walk(v.stmt.rhs):
        name = None
        if isinstance(node, Leaf):
            name = node.leaf.field
        elif isinstance(node, FieldRef):
            name = node.name
        if name is not None and name not in seen:
            seen.add(name)
            out.append(_lookup(env, name))
    return out


def _prepare(v: ValidatedStatement, env: Env) -> tuple[TensorField, int]:
    """Check gridsizes, resize the target for plain assignment, return (lhs, N)."""
    lhs = _lookup(env, v.stmt.lhs.field)
    if not isinstance(lhs, TensorField):
        raise EvalError(f"{v.stmt.lhs.field!r} is not a tensor field")
    rhs_fields = _rhs_fields(v, env)
    sizes = {f.name: f.gridsize for f in rhs_fields}
    if len(set(sizes.values())) > 1:
        detail = ", ".join(f"{n}={s}" for n, s in sizes.items())
        raise EvalError(f"right-hand-side fields disagree on gridsize: {detail}")
    n = next(iter(sizes.values())) if sizes else lhs.gridsize
    if sizes and n == 0:
        empty = next(iter(sizes))
        raise EvalError(f"field {empty!r} used in arithmetic before it holds data")
    if lhs.gridsize != n:
        if v.stmt.op != "=":
            raise EvalError(
                f"{v.stmt.lhs.field!r} has gridsize {lhs.gridsize} but the "
                f"right-hand side has {n}; {v.stmt.op} cannot resize"
            )
        lhs.resize(n)
    return lhs, n


def eval_statement(
    v: ValidatedStatement,
    env: Env,
    *,
    chunk: int | None = None,
    threads: int | None = None,
) -> None:
    """Execute one statement in place over `env`.

    With `chunk`, grid points are processed in consecutive blocks of that
    size (optionally on `threads` workers); results are identical to the
    unchunked run because chunking only partitions the grid dimension.
    """
    lhs_field, n = _prepare(v, env)
    lhs = v.stmt.lhs
    op = v.stmt.op
    spans = [(0, n)] if not chunk else [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]

    def run_span(span: tuple[int, int]) -> None:
        lo, hi = span
        with np.errstate(divide="ignore", invalid="ignore"):
            for binding in v.lhs_assignments():
                o, i = leaf_component(lhs, v.lhs_shape, binding)
                values = _eval(v.stmt.rhs, env, binding, v, lo, hi)
                _store(lhs_field, o, i, op, values, lo, hi)

    if threads and len(spans) > 1:
        # spans write disjoint grid slices, so concurrent execution is safe
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run_span, spans))
    else:
        for span in spans:
            run_span(span)


def eval_statement_per_component(v: ValidatedStatement, env: Env) -> None:
    """Execute one statement as one scalar statement per target component.

    An outer driver walks the canonical left-hand-side components; for each,
    every loop index is substituted into the right-hand side and the resulting
    component-wise statement is evaluated on its own full grid traversal.
    Arithmetic order per grid point matches `eval_statement` exactly.
    """
    lhs_field, n = _prepare(v, env)
    lhs = v.stmt.lhs
    op = v.stmt.op
    with np.errstate(divide="ignore", invalid="ignore"):
        for binding in v.lhs_assignments():
            o, i = leaf_component(lhs, v.lhs_shape, binding)
            rhs = v.stmt.rhs
            for var, value in binding.items():
                rhs = substitute(rhs, var, value)
            values = _eval(rhs, env, {}, v, 0, n)
            _store(lhs_field, o, i, op, values, 0, n)
