"""Expression-tree IR for tensor statements, with validation and accounting.

Statements assign an expression to an indexed tensor component set.  The RHS
tree supports leaves (indexed tensors, scalar fields, bare numbers), addition,
subtraction, multiplication, negation, division by scalar-valued expressions,
square root of scalar-valued expressions, and explicit index sums.  Implicit
summation over repeated indices is deliberately absent: a repeated free index
across a product means a plain component-wise product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .fields import IndexVar, TensorShape
from .symmetry import SymmetrySpec, iter_canonical, slot_index


class ValidationError(ValueError):
    """Statement rejected; `code` identifies which rule fired."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# --- index terms -----------------------------------------------------------


@dataclass(frozen=True)
class Fixed:
    """A slot pinned to one integer index value."""

    value: int


@dataclass(frozen=True)
class VarTerm:
    """A slot driven by a loop index, optionally shifted by a constant."""

    var: IndexVar
    offset: int = 0


IndexTerm = Union[Fixed, VarTerm]


@dataclass(frozen=True)
class TensorLeaf:
    field: str
    outer: tuple[IndexTerm, ...]
    inner: tuple[IndexTerm, ...] = ()
    declared_sym: SymmetrySpec | None = None

    @property
    def terms(self) -> tuple[IndexTerm, ...]:
        return self.outer + self.inner

    def vars(self) -> list[IndexVar]:
        return [t.var for t in self.terms if isinstance(t, VarTerm)]


# --- expression nodes ------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    leaf: TensorLeaf


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class FieldRef:
    """Reference to a scalar field (one grid array, no indices)."""

    name: str


@dataclass(frozen=True)
class Add:
    l: "Expr"
    r: "Expr"


@dataclass(frozen=True)
class Sub:
    l: "Expr"
    r: "Expr"


@dataclass(frozen=True)
class Mul:
    l: "Expr"
    r: "Expr"


@dataclass(frozen=True)
class Div:
    l: "Expr"
    r: "Expr"  # must be scalar-valued


@dataclass(frozen=True)
class Neg:
    e: "Expr"


@dataclass(frozen=True)
class Sqrt:
    e: "Expr"  # must be scalar-valued


@dataclass(frozen=True)
class Sum:
    var: IndexVar
    body: "Expr"


Expr = Union[Leaf, Const, FieldRef, Add, Sub, Mul, Div, Neg, Sqrt, Sum]

ASSIGN_OPS = ("=", "+=", "-=", "*=", "/=")
_OP_WORDS = {"=": "set", "+=": "add", "-=": "sub", "*=": "mul", "/=": "div"}


@dataclass(frozen=True)
class Statement:
    lhs: TensorLeaf
    op: str
    rhs: Expr

    def __post_init__(self) -> None:
        if self.op not in ASSIGN_OPS:
            raise ValidationError("bad-op", f"unknown assignment operator {self.op!r}")


# --- free-index algebra ----------------------------------------------------


def free_indices(e: Expr) -> frozenset[IndexVar]:
    """Free index variables of `e`; sums bind their index."""
    if isinstance(e, Leaf):
        return frozenset(e.leaf.vars())
    if isinstance(e, (Const, FieldRef)):
        return frozenset()
    if isinstance(e, (Add, Sub)):
        left, right = free_indices(e.l), free_indices(e.r)
        if left != right:
            kind = "addition" if isinstance(e, Add) else "subtraction"
            raise ValidationError(
                "free-index-mismatch",
                f"{kind} operands have different free indices: "
                f"{_fmt_vars(left)} vs {_fmt_vars(right)}",
            )
        return left
    if isinstance(e, Mul):
        return free_indices(e.l) | free_indices(e.r)
    if isinstance(e, Div):
        right = free_indices(e.r)
        if right:
            raise ValidationError(
                "scalarity", f"divisor must be scalar-valued, has indices {_fmt_vars(right)}"
            )
        return free_indices(e.l)
    if isinstance(e, Neg):
        return free_indices(e.e)
    if isinstance(e, Sqrt):
        inner = free_indices(e.e)
        if inner:
            raise ValidationError(
                "scalarity", f"sqrt argument must be scalar-valued, has indices {_fmt_vars(inner)}"
            )
        return frozenset()
    if isinstance(e, Sum):
        body = free_indices(e.body)
        if e.var not in body:
            raise ValidationError(
                "sum-index-unused", f"sum index {e.var.name!r} does not occur free in its body"
            )
        return body - {e.var}
    raise TypeError(f"not an expression node: {e!r}")


def _fmt_vars(vs: frozenset[IndexVar]) -> str:
    return "{" + ", ".join(sorted(v.name for v in vs)) + "}"


def walk(e: Expr) -> Iterator[Expr]:
    """Preorder traversal of the expression tree."""
    yield e
    if isinstance(e, (Add, Sub, Mul, Div)):
        yield from walk(e.l)
        yield from walk(e.r)
    elif isinstance(e, (Neg, Sqrt)):
        yield from walk(e.e)
    elif isinstance(e, Sum):
        yield from walk(e.body)


# --- declarations and validation -------------------------------------------


@dataclass
class Declarations:
    """Field declarations a statement is validated against."""

    tensors: dict[str, TensorShape]
    scalar_fields: set[str]

    def tensor(self, name: str) -> TensorShape:
        if name not in self.tensors:
            kind = "a scalar field" if name in self.scalar_fields else "not declared"
            raise ValidationError("unknown-field", f"{name!r} used as a tensor but is {kind}")
        return self.tensors[name]

    def scalar(self, name: str) -> str:
        if name not in self.scalar_fields:
            kind = "a tensor" if name in self.tensors else "not declared"
            raise ValidationError("unknown-field", f"{name!r} used as a scalar field but is {kind}")
        return name


@dataclass(frozen=True)
class ValidatedStatement:
    """Statement plus the loop structure derived from its left-hand side."""

    stmt: Statement
    decls: Declarations
    lhs_shape: TensorShape
    lhs_vars: tuple[IndexVar, ...]  # Var-slot variables, concatenated outer+inner order
    loop_sym: SymmetrySpec  # effective symmetry over positions in lhs_vars

    def lhs_assignments(self) -> Iterator[dict[IndexVar, int]]:
        """All canonical LHS index assignments, in storage (slot) order."""
        dims = tuple(v.dim for v in self.lhs_vars)
        for values in iter_canonical(dims, self.loop_sym):
            yield dict(zip(self.lhs_vars, values))


def _check_group_terms(
    field: str, terms: tuple[IndexTerm, ...], rank: int, dim: int, group: str
) -> None:
    if len(terms) != rank:
        raise ValidationError(
            "rank-mismatch",
            f"{field!r} {group} group has rank {rank} but {len(terms)} index terms given",
        )
    for t in terms:
        if isinstance(t, Fixed):
            if not (0 <= t.value < dim):
                raise ValidationError(
                    "index-out-of-range",
                    f"{field!r}: fixed index {t.value} outside [0, {dim})",
                )
        else:
            if t.offset < 0:
                raise ValidationError(
                    "index-out-of-range", f"{field!r}: negative index offset {t.offset}"
                )
            if t.var.dim + t.offset > dim:
                raise ValidationError(
                    "index-out-of-range",
                    f"{field!r}: index {t.var.name}+{t.offset} reaches "
                    f"{t.var.dim - 1 + t.offset}, beyond [0, {dim})",
                )


def _check_leaf(leaf: TensorLeaf, decls: Declarations) -> TensorShape:
    shape = decls.tensor(leaf.field)
    _check_group_terms(leaf.field, leaf.outer, shape.outer_rank, shape.dim, "outer")
    _check_group_terms(leaf.field, leaf.inner, shape.inner_rank, shape.dim, "inner")
    return shape


def _var_positions(terms: tuple[IndexTerm, ...]) -> list[int]:
    return [p for p, t in enumerate(terms) if isinstance(t, VarTerm)]


def _effective_sym(sym: SymmetrySpec, terms: tuple[IndexTerm, ...]) -> SymmetrySpec:
    """Symmetry left after pinning the Fixed slots of one leaf group."""
    return sym.restricted_to(_var_positions(terms))


def validate_statement(stmt: Statement, decls: Declarations) -> ValidatedStatement:
    """Check a statement against declarations; returns the annotated form.

    Rules, in order: distinct LHS index variables; equal LHS/RHS free-index
    sets; declared LHS symmetry agreeing with the field's symmetry once fixed
    slots are dropped; every index term within the field's dimension; scalar
    divisors, sqrt arguments, and scalar RHS for *= and /=.
    """
    lhs = stmt.lhs

    # (1) no repeated index variables on the left-hand side
    lhs_vars_all = lhs.vars()
    names = [v.name for v in lhs_vars_all]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise ValidationError(
            "repeated-lhs-index", f"index {dup!r} appears more than once on the left-hand side"
        )

    # (2) free-index sets must match across the assignment; a scalar-valued
    # right-hand side broadcasts over every target component
    lhs_free = frozenset(lhs_vars_all)
    rhs_free = free_indices(stmt.rhs)
    if rhs_free and lhs_free != rhs_free:
        raise ValidationError(
            "free-index-mismatch",
            f"left-hand side has free indices {_fmt_vars(lhs_free)} "
            f"but right-hand side has {_fmt_vars(rhs_free)}",
        )

    # (3) declared symmetry must agree with the field's, modulo fixed slots
    lhs_shape = decls.tensor(lhs.field)
    declared = lhs.declared_sym or SymmetrySpec()
    try:
        declared.check_rank(len(lhs.outer))
    except Exception as exc:
        raise ValidationError("symmetry-mismatch", str(exc)) from exc
    eff_declared = _effective_sym(declared, lhs.outer)
    eff_field = _effective_sym(lhs_shape.outer_sym, lhs.outer)
    if eff_declared != eff_field:
        raise ValidationError(
            "symmetry-mismatch",
            f"declared symmetry {declared.inequalities} does not match "
            f"{lhs.field!r}'s symmetry {lhs_shape.outer_sym.inequalities} "
            "restricted to variable slots",
        )
    eff_inner = _effective_sym(lhs_shape.inner_sym, lhs.inner)
    if eff_inner.inequalities:
        raise ValidationError(
            "symmetry-mismatch",
            f"{lhs.field!r} has inner-group symmetry on variable slots; "
            "inner symmetries cannot be declared on a left-hand side",
        )

    # (4) every index term within bounds, on both sides
    _check_leaf(lhs, decls)
    for node in walk(stmt.rhs):
        if isinstance(node, Leaf):
            _check_leaf(node.leaf, decls)
        elif isinstance(node, FieldRef):
            decls.scalar(node.name)

    # (5) scalarity of *= and /= right-hand sides (Div/Sqrt checked in (2))
    if stmt.op in ("*=", "/=") and rhs_free:
        raise ValidationError(
            "scalarity",
            f"{stmt.op} requires a scalar-valued right-hand side, "
            f"got free indices {_fmt_vars(rhs_free)}",
        )

    var_pos = _var_positions(lhs.terms)
    remap = {p: k for k, p in enumerate(var_pos)}
    outer_pairs = eff_field.inequalities
    loop_pairs = [(remap[p], remap[q]) for p, q in outer_pairs]
    # inner-group effective symmetry is empty by rule (3); nothing to append
    return ValidatedStatement(
        stmt=stmt,
        decls=decls,
        lhs_shape=lhs_shape,
        lhs_vars=tuple(lhs.terms[p].var for p in var_pos),
        loop_sym=SymmetrySpec(tuple(loop_pairs)),
    )


# --- canonical signatures ---------------------------------------------------


def _term_str(t: IndexTerm) -> str:
    if isinstance(t, Fixed):
        return f"f{t.value}"
    return f"v{t.var.name}+{t.offset}"


def _terms_str(terms: tuple[IndexTerm, ...]) -> str:
    return "[" + ",".join(_term_str(t) for t in terms) + "]"


def _pairs_str(sym: SymmetrySpec) -> str:
    return "[" + ",".join(f"({p},{q})" for p, q in sym.inequalities) + "]"


def _expr_str(e: Expr) -> str:
    if isinstance(e, Leaf):
        groups = _terms_str(e.leaf.outer)
        if e.leaf.inner:
            groups += "," + _terms_str(e.leaf.inner)
        return f"LEAF({e.leaf.field},{groups})"
    if isinstance(e, Const):
        return f"CONST({e.value!r})"
    if isinstance(e, FieldRef):
        return f"SFIELD({e.name})"
    if isinstance(e, Add):
        return f"ADD({_expr_str(e.l)};{_expr_str(e.r)})"
    if isinstance(e, Sub):
        return f"SUB({_expr_str(e.l)};{_expr_str(e.r)})"
    if isinstance(e, Mul):
        return f"MUL({_expr_str(e.l)};{_expr_str(e.r)})"
    if isinstance(e, Div):
        return f"DIV({_expr_str(e.l)};{_expr_str(e.r)})"
    if isinstance(e, Neg):
        return f"NEG({_expr_str(e.e)})"
    if isinstance(e, Sqrt):
        return f"SQRT({_expr_str(e.e)})"
    if isinstance(e, Sum):
        return f"SUM({e.var.name},{e.var.dim};{_expr_str(e.body)})"
    raise TypeError(f"not an expression node: {e!r}")


def signature(v: ValidatedStatement) -> str:
    """Deterministic string identity of a statement, injective over structure."""
    lhs, shape = v.stmt.lhs, v.lhs_shape
    declared = lhs.declared_sym or SymmetrySpec()
    parts = [
        lhs.field,
        str(shape.dim),
        f"[{shape.outer_rank},{shape.inner_rank}]",
        _pairs_str(declared),
        _terms_str(lhs.outer),
    ]
    if lhs.inner:
        parts.append(_terms_str(lhs.inner))
    return f"ASSIGN({_OP_WORDS[v.stmt.op]};LHS({','.join(parts)});{_expr_str(v.stmt.rhs)})"


# --- data-volume accounting --------------------------------------------------


def _term_value(t: IndexTerm, binding: Mapping[IndexVar, int]) -> int:
    if isinstance(t, Fixed):
        return t.value
    return binding[t.var] + t.offset


def leaf_component(
    leaf: TensorLeaf, shape: TensorShape, binding: Mapping[IndexVar, int]
) -> tuple[int, int]:
    """(outer slot, inner slot) addressed by `leaf` under `binding`."""
    outer = [_term_value(t, binding) for t in leaf.outer]
    inner = [_term_value(t, binding) for t in leaf.inner]
    return (
        slot_index(shape.dim, shape.outer_rank, shape.outer_sym, outer),
        slot_index(shape.dim, shape.inner_rank, shape.inner_sym, inner),
    )


def count_data(v: ValidatedStatement) -> tuple[int, int]:
    """(N_e, N_d): distinct component arrays touched, and bare numbers used.

    N_e enumerates every LHS index assignment and every sum-index value,
    collecting distinct (field, canonical slot) pairs across both sides; a
    scalar field contributes one array.  N_d counts number literals.
    """
    touched: set[tuple] = set()

    def visit(e: Expr, binding: dict[IndexVar, int]) -> None:
        if isinstance(e, Leaf):
            shape = v.decls.tensor(e.leaf.field)
            touched.add((e.leaf.field, *leaf_component(e.leaf, shape, binding)))
        elif isinstance(e, FieldRef):
            touched.add((e.name,))
        elif isinstance(e, (Add, Sub, Mul, Div)):
            visit(e.l, binding)
            visit(e.r, binding)
        elif isinstance(e, (Neg, Sqrt)):
            visit(e.e, binding)
        elif isinstance(e, Sum):
            for val in range(e.var.dim):
                visit(e.body, {**binding, e.var: val})

    for binding in v.lhs_assignments():
        touched.add((v.stmt.lhs.field, *leaf_component(v.stmt.lhs, v.lhs_shape, binding)))
        visit(v.stmt.rhs, binding)

    n_d = sum(1 for node in walk(v.stmt.rhs) if isinstance(node, Const))
    return len(touched), n_d
