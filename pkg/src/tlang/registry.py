"""Statement registry and multi-backend source emission.

Statements register under their canonical signature; the first registration
assigns the next ordinal and repeat registrations return the existing one.
`write_all` lays out, per backend, the three generated sources — a dispatch
layer routing each statement to the compiled variant selected by ACCEL_CPU or
ACCEL_CUDA, a bindings layer describing and extracting flattened aliased
component-pointer arrays, and the kernel bodies — plus a tab-separated
manifest of (ordinal, signature, N_e, N_d).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import codegen_c, codegen_cuda
from .codegen_c import ArgDescriptor, GeneratedUnit
from .ir import ValidatedStatement, count_data, signature
from .symmetry import alias_table, component_count

MANIFEST_NAME = "tloops_manifest.tsv"

BACKENDS = ("c", "cuda", "both")


@dataclass
class RegistryEntry:
    ordinal: int
    signature: str
    stmt: ValidatedStatement
    n_e: int
    n_d: int


class Registry:
    """Deduplicating statement collection with stable 1-based ordinals."""

    def __init__(self) -> None:
        self._by_signature: dict[str, int] = {}
        self.entries: list[RegistryEntry] = []

    def __len__(self) -> int:
        return len(self.entries)

    def register(self, v: ValidatedStatement) -> int:
        sig = signature(v)
        existing = self._by_signature.get(sig)
        if existing is not None:
            return existing
        ordinal = len(self.entries) + 1
        n_e, n_d = count_data(v)
        self.entries.append(RegistryEntry(ordinal, sig, v, n_e, n_d))
        self._by_signature[sig] = ordinal
        return ordinal

    def manifest_text(self) -> str:
        return "".join(
            f"{e.ordinal}\t{e.signature}\t{e.n_e}\t{e.n_d}\n" for e in self.entries
        )

    def write_all(self, out_dir: str | Path, backend: str = "c") -> list[Path]:
        """Emit the generated-source file set; returns the written paths."""
        if backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {backend!r}")
        if not self.entries:
            raise ValueError("registry is empty: nothing to generate")
        out = Path(out_dir)
        sigs = [e.signature for e in self.entries]
        files: dict[str, str] = {}
        if backend in ("c", "both"):
            units = [codegen_c.emit_c(e.stmt, e.ordinal) for e in self.entries]
            files["tloops_kernels.c"] = codegen_c.render_kernels_file(units)
            files["tloops_kernels.h"] = codegen_c.render_header_file(units)
            files["tloops_dispatch.c"] = _render_dispatch_c(units)
            files["tloops_bindings.c"] = _render_bindings(units, sigs, "c")
        if backend in ("cuda", "both"):
            units = [codegen_cuda.emit_cuda(e.stmt, e.ordinal) for e in self.entries]
            files["tloops_kernels.cu"] = codegen_cuda.render_kernels_file(units)
            files["tloops_dispatch.cu"] = _render_dispatch_cuda(units)
            files["tloops_bindings.cu"] = _render_bindings(units, sigs, "cuda")
            files["tloops_ptrcache.cu"] = codegen_cuda.emit_pointer_cache()
        files[MANIFEST_NAME] = self.manifest_text()

        written = []
        try:
            out.mkdir(parents=True, exist_ok=True)
            for name, text in files.items():
                path = out / name
                path.write_text(text)
                written.append(path)
        except OSError as exc:
            raise RuntimeError(f"cannot write generated sources under {out}: {exc}") from exc
        return sorted(written)


def _dispatch_name(ordinal: int) -> str:
    return f"tloops_dispatch_{ordinal:04d}"


def _render_dispatch_c(units: list[GeneratedUnit]) -> str:
    lines = ['#include "tloops_kernels.h"', "", "#if defined(ACCEL_CPU)", ""]
    for n, unit in enumerate(units, start=1):
        call = ", ".join(["N"] + [a.param for a in unit.args])
        lines += [
            f"void {_dispatch_name(n)}({unit.param_list()})",
            "{",
            f"  {unit.kernel_name}({call});",
            "}",
            "",
        ]
    lines += ["#endif /* ACCEL_CPU */", ""]
    return "\n".join(lines)


def _render_dispatch_cuda(units: list[GeneratedUnit]) -> str:
    lines = []
    for unit in units:
        lines.append(codegen_cuda.wrapper_prototype(unit))
    lines += ["", "#if defined(ACCEL_CUDA)", ""]
    for n, unit in enumerate(units, start=1):
        call = ", ".join(["N"] + [a.param for a in unit.args])
        lines += [
            f"void {_dispatch_name(n)}({unit.param_list()})",
            "{",
            f"  (void){unit.wrapper_name}({call});",
            "}",
            "",
        ]
    lines += ["#endif /* ACCEL_CUDA */", ""]
    return "\n".join(lines)


_BINDINGS_TYPES = """\
/* Argument descriptors for every generated kernel.  A harness drives kernels
 * through this table alone: each descriptor names the field bound to one
 * parameter, the shape it must have, and (for tensors) the alias table taking
 * a flattened multi-index (slot 0 fastest, outer group then inner) to its
 * canonical component, so symmetric images share one buffer. */

typedef struct tl_arg_desc {
    const char* name;        /* field name; consts use the parameter name */
    int kind;                /* 0 target tensor, 1 input tensor, 2 scalar field, 3 number */
    int dim;
    int outer_rank;
    int inner_rank;
    int n_outer_pairs;       /* symmetry inequality pairs, flattened (p1,q1,p2,q2,...) */
    const unsigned char* outer_pairs;
    int n_inner_pairs;
    const unsigned char* inner_pairs;
    long n_components;       /* canonical component count (outer*inner) */
    long n_flat;             /* dim**(outer_rank+inner_rank) */
    const long* alias;       /* n_flat entries: flat index -> component */
    double value;            /* kind 3 only */
} tl_arg_desc;

typedef struct tl_entry {
    int ordinal;
    const char* signature;
    int n_args;
    const tl_arg_desc* args;
    /* tensors: flattened aliased pointer arrays in descriptor order (target
     * first); scalars and numbers likewise in descriptor order */
    void (*call)(const long N, double** const* tensors,
                 const double* const* scalars, const double* numbers);
} tl_entry;
"""


def _combined_alias(arg: ArgDescriptor) -> list[int]:
    """Flat concatenated multi-index (outer fastest) to canonical component."""
    outer = alias_table(arg.dim, arg.outer_rank, arg.outer_sym)
    inner = alias_table(arg.dim, arg.inner_rank, arg.inner_sym)
    inner_count = component_count(arg.dim, arg.inner_rank, arg.inner_sym)
    n_outer_flat = arg.dim**arg.outer_rank
    ordered = [0] * (n_outer_flat * arg.dim**arg.inner_rank)
    for iflat in range(arg.dim**arg.inner_rank):
        for oflat in range(n_outer_flat):
            ordered[oflat + n_outer_flat * iflat] = outer[oflat] * inner_count + inner[iflat]
    return ordered


def _render_bindings(units: list[GeneratedUnit], sigs: list[str], backend: str) -> str:
    lines = ["#include <stddef.h>", ""]
    if backend == "c":
        lines.insert(0, '#include "tloops_kernels.h"')
    else:
        for unit in units:
            lines.append(codegen_cuda.wrapper_prototype(unit))
        lines.append("")
    lines += [_BINDINGS_TYPES, ""]
    kinds = {"lhs": 0, "rhs": 1, "scalar": 2, "const": 3}

    for n, unit in enumerate(units, start=1):
        tag = f"{n:04d}"
        for k, arg in enumerate(unit.args):
            if not arg.is_tensor:
                continue
            pairs = arg.outer_sym.inequalities
            if pairs:
                flat = ",".join(str(x) for p in pairs for x in p)
                lines.append(f"static const unsigned char tl_osym_{tag}_a{k}[] = {{{flat}}};")
            pairs = arg.inner_sym.inequalities
            if pairs:
                flat = ",".join(str(x) for p in pairs for x in p)
                lines.append(f"static const unsigned char tl_isym_{tag}_a{k}[] = {{{flat}}};")
            alias = ",".join(str(a) for a in _combined_alias(arg))
            lines.append(f"static const long tl_alias_{tag}_a{k}[] = {{{alias}}};")
        lines.append(f"static const tl_arg_desc tl_args_{tag}[] = {{")
        for k, arg in enumerate(unit.args):
            kind = kinds[arg.role]
            if arg.is_tensor:
                n_comp = component_count(arg.dim, arg.outer_rank, arg.outer_sym) * component_count(
                    arg.dim, arg.inner_rank, arg.inner_sym
                )
                osym = f"tl_osym_{tag}_a{k}" if arg.outer_sym.inequalities else "NULL"
                isym = f"tl_isym_{tag}_a{k}" if arg.inner_sym.inequalities else "NULL"
                lines.append(
                    f'  {{"{arg.name}", {kind}, {arg.dim}, {arg.outer_rank}, {arg.inner_rank}, '
                    f"{len(arg.outer_sym.inequalities)}, {osym}, "
                    f"{len(arg.inner_sym.inequalities)}, {isym}, "
                    f"{n_comp}, {arg.n_flat}, tl_alias_{tag}_a{k}, 0.0}},"
                )
            elif arg.role == "scalar":
                lines.append(
                    f'  {{"{arg.name}", {kind}, 0, 0, 0, 0, NULL, 0, NULL, 1, 1, NULL, 0.0}},'
                )
            else:
                lines.append(
                    f'  {{"{arg.name}", {kind}, 0, 0, 0, 0, NULL, 0, NULL, 0, 0, NULL, {arg.value!r}}},'
                )
        lines.append("};")
        lines.append("")

        tensors = [a for a in unit.args if a.is_tensor]
        scalars = [a for a in unit.args if a.role == "scalar"]
        consts = [a for a in unit.args if a.role == "const"]
        call_args = ["N"]
        for a in unit.args:
            if a.is_tensor:
                k = tensors.index(a)
                cast = "" if a.role == "lhs" else "(const double* const*)"
                call_args.append(f"{cast}T[{k}]")
            elif a.role == "scalar":
                call_args.append(f"S[{scalars.index(a)}]")
            else:
                call_args.append(f"D[{consts.index(a)}]")
        target = unit.kernel_name if backend == "c" else unit.wrapper_name
        cast = "" if backend == "c" else "(void)"
        lines += [
            f"static void tl_call_{tag}(const long N, double** const* T,",
            "                          const double* const* S, const double* D)",
            "{",
            "  (void)T; (void)S; (void)D;",
            f"  {cast}{target}({', '.join(call_args)});",
            "}",
            "",
        ]

    # nvcc compiles bindings as C++, where file-scope const objects default to
    # internal linkage; the export tables must stay visible to dlsym
    export = 'extern "C" ' if backend == "cuda" else ""
    lines.append(f"{export}const tl_entry tloops_entries[] = {{")
    for n, (unit, sig) in enumerate(zip(units, sigs), start=1):
        tag = f"{n:04d}"
        lines.append(f'  {{{n}, "{sig}", {len(unit.args)}, tl_args_{tag}, tl_call_{tag}}},')
    lines.append("};")
    lines.append(f"{export}const int tloops_entry_count = {len(units)};")
    lines.append("")
    return "\n".join(lines)
