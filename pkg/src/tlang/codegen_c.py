"""Loop-based C source emission for validated statements.

Generated kernels take every tensor as one flattened array of component
pointers of length dim**rank (outer and inner groups concatenated, slot 0
varying fastest); symmetric components alias the same buffer on the caller
side, so the emitted loops contain no symmetry arithmetic beyond their lower
bounds.  `restrict` is intentionally absent: aliased symmetric components
would make it unsound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import IndexVar
from .ir import (
    Add,
    Const,
    Div,
    Expr,
    FieldRef,
    Fixed,
    IndexTerm,
    Leaf,
    Mul,
    Neg,
    Sqrt,
    Sub,
    Sum,
    TensorLeaf,
    ValidatedStatement,
    walk,
)
from .symmetry import SymmetrySpec

KERNEL_NAME = "tl_%04d"

# identifiers the generated body reserves for itself
_RESERVED = ("x", "N", "L")


@dataclass(frozen=True)
class ArgDescriptor:
    """One kernel parameter: where it binds and what shape it expects."""

    role: str  # "lhs" | "rhs" | "scalar" | "const"
    name: str  # field name, or the parameter name for consts
    param: str  # C parameter name
    dim: int = 0
    outer_rank: int = 0
    inner_rank: int = 0
    outer_sym: SymmetrySpec = SymmetrySpec()
    inner_sym: SymmetrySpec = SymmetrySpec()
    value: float = 0.0  # consts only

    @property
    def is_tensor(self) -> bool:
        return self.role in ("lhs", "rhs")

    @property
    def n_flat(self) -> int:
        return self.dim ** (self.outer_rank + self.inner_rank)

    def ctype(self) -> str:
        if self.role == "lhs":
            return "double* const*"
        if self.role == "rhs":
            return "const double* const*"
        if self.role == "scalar":
            return "const double*"
        return "const double"


@dataclass
class GeneratedUnit:
    """Emitted source for one statement plus its argument manifest."""

    kernel_name: str
    source: str
    args: list[ArgDescriptor]
    wrapper_name: str | None = None
    launch: "object | None" = None

    def param_list(self) -> str:
        parts = ["const long N"]
        parts += [f"{a.ctype()} {a.param}" for a in self.args]
        return ", ".join(parts)


def _index_name(var: IndexVar) -> str:
    name = var.name
    if name in _RESERVED or (name[0] in "RFds" and name[1:].isdigit()):
        return name + "_"
    return name


def collect_args(v: ValidatedStatement) -> list[ArgDescriptor]:
    """LHS first, then RHS leaves by first occurrence, depth-first left to right.

    A field passed once serves every occurrence; each number literal becomes
    its own parameter.
    """
    args: list[ArgDescriptor] = []
    seen: set[str] = set()

    def tensor_desc(name: str, role: str, param: str) -> ArgDescriptor:
        shape = v.decls.tensor(name)
        return ArgDescriptor(
            role,
            name,
            param,
            shape.dim,
            shape.outer_rank,
            shape.inner_rank,
            shape.outer_sym,
            shape.inner_sym,
        )

    lhs = v.stmt.lhs
    args.append(tensor_desc(lhs.field, "lhs", "L"))
    seen.add(lhs.field)
    n_tensor = n_scalar = n_const = 0
    for node in walk(v.stmt.rhs):
        if isinstance(node, Leaf) and node.leaf.field not in seen:
            seen.add(node.leaf.field)
            args.append(tensor_desc(node.leaf.field, "rhs", f"R{n_tensor}"))
            n_tensor += 1
        elif isinstance(node, FieldRef) and node.name not in seen:
            seen.add(node.name)
            args.append(ArgDescriptor("scalar", node.name, f"F{n_scalar}"))
            n_scalar += 1
        elif isinstance(node, Const):
            args.append(ArgDescriptor("const", f"d{n_const}", f"d{n_const}", value=node.value))
            n_const += 1
    return args


def _flat_expr(
    terms: tuple[IndexTerm, ...],
    dim: int,
    names: dict[IndexVar, str],
    binding: dict[IndexVar, int] | None = None,
) -> str:
    """Flattened index expression, folding fixed and bound-term contributions."""
    binding = binding or {}
    parts: list[str] = []
    constant = 0
    stride = 1
    for t in terms:
        if isinstance(t, Fixed):
            constant += t.value * stride
        elif t.var in binding:
            constant += (binding[t.var] + t.offset) * stride
        else:
            base = names[t.var]
            term = f"({base}+{t.offset})" if t.offset else base
            parts.append(term if stride == 1 else f"{stride}*{term}")
        stride *= dim
    if constant or not parts:
        parts.append(str(constant))
    return "+".join(parts)


class _BodyWriter:
    """Renders an RHS to a C expression plus prelude lines for sum loops."""

    def __init__(self, v: ValidatedStatement, params: dict[str, str], names: dict[IndexVar, str]):
        self.v = v
        self.params = params
        self.names = names
        self.n_sums = 0
        # consts are numbered by occurrence, matching collect_args
        self.n_consts = 0

    def leaf_ref(self, leaf: TensorLeaf) -> str:
        shape = self.v.decls.tensor(leaf.field)
        flat = _flat_expr(leaf.terms, shape.dim, self.names)
        return f"{self.params[leaf.field]}[{flat}][x]"

    def render(self, e: Expr, prelude: list[str], depth: int) -> str:
        ind = "  " * depth
        if isinstance(e, Const):
            name = f"d{self.n_consts}"
            self.n_consts += 1
            return name
        if isinstance(e, FieldRef):
            return f"{self.params[e.name]}[x]"
        if isinstance(e, Leaf):
            return self.leaf_ref(e.leaf)
        if isinstance(e, (Add, Sub, Mul, Div)):
            op = {Add: " + ", Sub: " - ", Mul: "*", Div: "/"}[type(e)]
            left = self.render(e.l, prelude, depth)
            right = self.render(e.r, prelude, depth)
            return f"({left}{op}{right})"
        if isinstance(e, Neg):
            return f"(-{self.render(e.e, prelude, depth)})"
        if isinstance(e, Sqrt):
            return f"sqrt({self.render(e.e, prelude, depth)})"
        if isinstance(e, Sum):
            acc = f"s{self.n_sums}"
            self.n_sums += 1
            var = _index_name(e.var)
            self.names[e.var] = var
            inner: list[str] = []
            body = self.render(e.body, inner, depth + 1)
            prelude.append(f"{ind}double {acc} = 0;")
            prelude.append(f"{ind}for(int {var}=0; {var}<{e.var.dim}; ++{var}) {{")
            prelude.extend(inner)
            prelude.append(f"{ind}  {acc} += {body};")
            prelude.append(f"{ind}}}")
            return acc
        raise TypeError(f"not an expression node: {e!r}")


def _lhs_loop_order(v: ValidatedStatement) -> list[tuple[int, int, int | None]]:
    """(var position, dim, lower-bound var position) outermost first."""
    bounds = {p: q for p, q in v.loop_sym.inequalities}
    out = []
    for pos in reversed(range(len(v.lhs_vars))):
        out.append((pos, v.lhs_vars[pos].dim, bounds.get(pos)))
    return out


def emit_c(v: ValidatedStatement, ordinal: int) -> GeneratedUnit:
    """C function executing one statement; deterministic in (statement, ordinal)."""
    args = collect_args(v)
    params = {a.name: a.param for a in args if a.role != "const"}
    names = {var: _index_name(var) for var in v.lhs_vars}
    unit_name = KERNEL_NAME % ordinal

    writer = _BodyWriter(v, params, names)
    lines: list[str] = []
    depth = 0
    for pos, dim, bound in _lhs_loop_order(v):
        var = names[v.lhs_vars[pos]]
        lo = names[v.lhs_vars[bound]] if bound is not None else "0"
        lines.append("  " * depth + f"for(int {var}={lo}; {var}<{dim}; ++{var}) {{")
        depth += 1
    lines.append("  " * depth + "for(long x=0; x<N; ++x) {")
    depth += 1

    prelude: list[str] = []
    rhs_expr = writer.render(v.stmt.rhs, prelude, depth)
    lines.extend(prelude)
    lhs_ref = writer.leaf_ref(v.stmt.lhs)
    lines.append("  " * depth + f"{lhs_ref} {v.stmt.op} {rhs_expr};")
    while depth > 0:
        depth -= 1
        lines.append("  " * depth + "}")

    body = "\n".join("  " + line for line in lines)
    unit = GeneratedUnit(unit_name, "", args)
    unit.source = f"void {unit_name}({unit.param_list()})\n{{\n{body}\n}}\n"
    return unit


def prototype(unit: GeneratedUnit) -> str:
    return f"void {unit.kernel_name}({unit.param_list()});"


def render_kernels_file(units: list[GeneratedUnit]) -> str:
    parts = ['#include <math.h>\n\n#include "tloops_kernels.h"\n']
    for unit in units:
        parts.append(unit.source)
    return "\n".join(parts)


def render_header_file(units: list[GeneratedUnit]) -> str:
    lines = [
        "#ifndef TLOOPS_KERNELS_H",
        "#define TLOOPS_KERNELS_H",
        "",
        "#ifdef __cplusplus",
        'extern "C" {',
        "#endif",
        "",
    ]
    lines += [prototype(u) for u in units]
    lines += [
        "",
        "#ifdef __cplusplus",
        "}",
        "#endif",
        "",
        "#endif /* TLOOPS_KERNELS_H */",
        "",
    ]
    return "\n".join(lines)
