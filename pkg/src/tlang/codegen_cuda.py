"""CUDA kernel, launch-wrapper, and pointer-cache source emission.

Emission-only: output is checked structurally and against golden files, never
executed here.  The grid x dimension always covers the spatial points; the
remaining left-hand-side loop indices are parallelized over threadIdx.y,
blockIdx.y, threadIdx.z and blockIdx.z in slot order, except that the
dependent slot of each symmetry inequality runs as an in-kernel serial loop
(its trip count depends on another index, which thread addressing cannot
express), as does any index beyond the four available coordinates.
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
    Leaf,
    Mul,
    Neg,
    Sqrt,
    Sub,
    Sum,
    ValidatedStatement,
)
from .codegen_c import (
    ArgDescriptor,
    GeneratedUnit,
    _flat_expr,
    _index_name,
    collect_args,
)

KERNEL_NAME = "g_%04d"
WRAPPER_NAME = "CUDAWrapper_g_%04d"

_COORDS = ("threadIdx.y", "blockIdx.y", "threadIdx.z", "blockIdx.z")

# blocksize_x per blocksize_y*blocksize_z; totals are multiples of 32
BLOCKSIZE_X = {1: 256, 3: 64, 4: 64, 9: 32, 12: 16, 16: 32}

MAX_GRID_X = 65535


@dataclass(frozen=True)
class LaunchConfig:
    blocksize: tuple[int, int, int]  # (bx, by, bz)
    nblocks: tuple[str, int, int]  # (gx symbolic in N, gy, gz)
    serialized: tuple[str, ...]  # loop-index names run serially in-kernel


@dataclass(frozen=True)
class Plan:
    """Thread-coordinate assignment for the LHS loop indices."""

    parallel: tuple[tuple[int, IndexVar, str], ...]  # (position, var, coordinate)
    serialized: tuple[tuple[int, IndexVar, int | None], ...]  # (position, var, bound pos)


def plan_parallelization(v: ValidatedStatement) -> Plan:
    bounds = {p: q for p, q in v.loop_sym.inequalities}
    serial_pos = set(bounds)
    free_pos = [p for p in range(len(v.lhs_vars)) if p not in serial_pos]
    parallel = []
    for coord, pos in zip(_COORDS, free_pos):
        parallel.append((pos, v.lhs_vars[pos], coord))
    for pos in free_pos[len(_COORDS) :]:  # coordinates exhausted
        serial_pos.add(pos)
    serialized = tuple(
        (pos, v.lhs_vars[pos], bounds.get(pos)) for pos in sorted(serial_pos)
    )
    return Plan(tuple(parallel), serialized)


def tune(plan: Plan) -> LaunchConfig:
    dims = {coord: var.dim for _, var, coord in plan.parallel}
    by = dims.get("threadIdx.y", 1)
    bz = dims.get("threadIdx.z", 1)
    gy = dims.get("blockIdx.y", 1)
    gz = dims.get("blockIdx.z", 1)
    bx = BLOCKSIZE_X[by * bz]
    gx = "N/blocksize_x + (N % blocksize_x ? 1 : 0)"
    serialized = tuple(_index_name(var) for _, var, _ in plan.serialized)
    return LaunchConfig((bx, by, bz), (gx, gy, gz), serialized)


class _ExprWriter:
    """Renders an RHS with sums unrolled into explicit term chains.

    Sum indices are bound to concrete values during rendering, so their terms
    fold into the flattened component addresses; chain order matches the
    left-associated sum expansion used by the evaluator.
    """

    def __init__(self, v: ValidatedStatement, params: dict[str, str], names: dict[IndexVar, str]):
        self.v = v
        self.params = params
        self.names = names
        self.const_params: list[str] = []

    def render(self, e: Expr, binding: dict[IndexVar, int]) -> str:
        if isinstance(e, Const):
            return self.const_params.pop(0)
        if isinstance(e, FieldRef):
            return f"{self.params[e.name]}[x]"
        if isinstance(e, Leaf):
            shape = self.v.decls.tensor(e.leaf.field)
            flat = _flat_expr(e.leaf.terms, shape.dim, self.names, binding)
            return f"{self.params[e.leaf.field]}[{flat}][x]"
        if isinstance(e, (Add, Sub, Mul, Div)):
            op = {Add: " + ", Sub: " - ", Mul: "*", Div: "/"}[type(e)]
            left = self.render(e.l, binding)
            right = self.render(e.r, binding)
            return f"({left}{op}{right})"
        if isinstance(e, Neg):
            return f"(-{self.render(e.e, binding)})"
        if isinstance(e, Sqrt):
            return f"sqrt({self.render(e.e, binding)})"
        if isinstance(e, Sum):
            terms = []
            for value in range(e.var.dim):
                consts_before = list(self.const_params)
                terms.append(self.render(e.body, {**binding, e.var: value}))
                if value < e.var.dim - 1:
                    self.const_params = consts_before  # each copy reuses the same literals
            return "(" + " + ".join(terms) + ")"
        raise TypeError(f"not an expression node: {e!r}")


def emit_cuda(v: ValidatedStatement, ordinal: int) -> GeneratedUnit:
    """Kernel plus launch wrapper for one statement."""
    args = collect_args(v)
    params = {a.name: a.param for a in args if a.role != "const"}
    names = {var: _index_name(var) for var in v.lhs_vars}
    plan = plan_parallelization(v)
    launch = tune(plan)
    kernel = KERNEL_NAME % ordinal
    wrapper = WRAPPER_NAME % ordinal

    def param_decl(a: ArgDescriptor, restrict: bool) -> str:
        qual = " __restrict__" if restrict and a.role != "const" else ""
        return f"{a.ctype()}{qual} {a.param}"

    kparams = ", ".join(["const long N"] + [param_decl(a, True) for a in args])
    wparams = ", ".join(["const long N"] + [param_decl(a, False) for a in args])

    lines = [f"__global__ void {kernel}({kparams})", "{"]
    for pos, var, coord in plan.parallel:
        lines.append(f"  const int {names[var]} = {coord};")
    lines.append("  const long x = blockIdx.x*blockDim.x + threadIdx.x;")
    guard = "&&".join(
        ["(x<N)"] + [f"({names[var]}<{var.dim})" for _, var, _ in plan.parallel]
    )
    lines.append(f"  if ({guard}) {{")
    depth = 2
    for pos, var, bound in sorted(plan.serialized, reverse=True):  # high slots outermost
        name = names[var]
        lo = names[v.lhs_vars[bound]] if bound is not None else "0"
        lines.append("  " * depth + f"for(int {name}={lo}; {name}<{var.dim}; ++{name}) {{")
        depth += 1

    writer = _ExprWriter(v, params, names)
    writer.const_params = [a.param for a in args if a.role == "const"]
    rhs = writer.render(v.stmt.rhs, {})
    shape = v.lhs_shape
    lhs_flat = _flat_expr(v.stmt.lhs.terms, shape.dim, names)
    lines.append("  " * depth + f"L[{lhs_flat}][x] {v.stmt.op} {rhs};")
    while depth > 1:
        depth -= 1
        lines.append("  " * depth + "}")
    lines.append("}")
    kernel_src = "\n".join(lines)

    bx, by, bz = launch.blocksize
    gx, gy, gz = launch.nblocks
    call_args = ", ".join(["N"] + [a.param for a in args])
    wrapper_src = "\n".join(
        [
            f"int {wrapper}({wparams})",
            "{",
            f"  const int blocksize_x = {bx};",
            f"  if (N > {MAX_GRID_X}L*blocksize_x) {{",
            "    return 1;  /* grid x dimension cannot cover N */",
            "  }",
            f"  const int nblocks_x = (int)({gx});",
            f"  const int blocksize_y = {by};",
            f"  const int nblocks_y = {gy};",
            f"  const int blocksize_z = {bz};",
            f"  const int nblocks_z = {gz};",
            "  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);",
            "  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);",
            f"  {kernel}<<<nblocks,blocksize>>>({call_args});",
            "  return 0;",
            "}",
        ]
    )

    unit = GeneratedUnit(kernel, kernel_src + "\n\n" + wrapper_src + "\n", args, wrapper, launch)
    return unit


def wrapper_prototype(unit: GeneratedUnit) -> str:
    params = ", ".join(["const long N"] + [f"{a.ctype()} {a.param}" for a in unit.args])
    return f"int {unit.wrapper_name}({params});"


def render_kernels_file(units: list[GeneratedUnit]) -> str:
    parts = ["#include <cuda_runtime.h>\n#include <math.h>\n"]
    for unit in units:
        parts.append(unit.source)
    return "\n".join(parts)


def emit_pointer_cache() -> str:
    """Self-contained device-pointer cache for component-pointer arrays.

    One cache record pairs a field's host pointer array with its lazily
    created device copy; retrieval compares the stored host array memberwise
    and re-uploads through the single guarded copy call only on mismatch.
    Compile with -DTL_PTRCACHE_NO_CUDA_HEADER to build the logic host-side
    against stubbed device-API calls.
    """
    return """\
#ifndef TL_PTRCACHE_NO_CUDA_HEADER
#include <cuda_runtime.h>
#endif
#include <stdlib.h>
#include <string.h>

typedef struct tl_ptrcache {
    const void* owner;     /* field this cache mirrors */
    long count;
    double** host_copy;    /* last-seen CPU pointer array */
    double** device_array; /* device copy, created on first retrieval */
} tl_ptrcache;

void tl_ptrcache_init(tl_ptrcache* cache, const void* owner)
{
    cache->owner = owner;
    cache->count = 0;
    cache->host_copy = 0;
    cache->device_array = 0;
}

void tl_ptrcache_release(tl_ptrcache* cache)
{
    if (cache->device_array) {
        cudaFree(cache->device_array);
    }
    free(cache->host_copy);
    cache->count = 0;
    cache->host_copy = 0;
    cache->device_array = 0;
}

static int tl_ptrcache_matches(const tl_ptrcache* cache, double* const* host_ptrs, long count)
{
    long i;
    if (cache->count != count) {
        return 0;
    }
    for (i = 0; i < count; ++i) {
        if (cache->host_copy[i] != host_ptrs[i]) {
            return 0;
        }
    }
    return 1;
}

double** tl_ptrcache_device(tl_ptrcache* cache, double* const* host_ptrs, long count)
{
    if (cache->device_array == 0) {
        /* never retrieved before: create device storage, leave host_copy
           zeroed so the comparison below reports a mismatch */
        cache->host_copy = (double**)calloc((size_t)count, sizeof(double*));
        cache->count = count;
        cudaMalloc((void**)&cache->device_array, (size_t)count * sizeof(double*));
    }
    if (!tl_ptrcache_matches(cache, host_ptrs, count)) {
        memcpy(cache->host_copy, host_ptrs, (size_t)count * sizeof(double*));
        cudaMemcpy(cache->device_array, cache->host_copy,
                   (size_t)count * sizeof(double*), cudaMemcpyHostToDevice);
    }
    return cache->device_array;
}
"""
