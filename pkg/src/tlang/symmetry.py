"""Symmetry-constrained index canonicalization, enumeration and storage layout.

A symmetry on one index group is a set of ordering constraints between slot
positions: the pair (p, q) with p < q demands ``idx[p] >= idx[q]`` for the
stored (canonical) representative of a component.  Exchanging the two slots of
a pair leaves the tensor unchanged, so all permutations of values inside a
connected group of paired slots address the same storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence


class ShapeError(ValueError):
    """Inconsistent symmetry positions, ranks or dimensions."""


class IndexRangeError(IndexError):
    """A multi-index value outside [0, dim)."""


@lru_cache(maxsize=None)
def _components(pairs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, ...], ...]:
    """Connected components of the slot graph induced by the pairs, sorted."""
    adj: dict[int, set[int]] = {}
    for p, q in pairs:
        adj.setdefault(p, set()).add(q)
        adj.setdefault(q, set()).add(p)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack, comp = [start], []
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            comp.append(n)
            stack.extend(adj[n] - seen)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


@dataclass(frozen=True)
class SymmetrySpec:
    """Ordered inequality pairs over the slots of one index group.

    Construction normalizes any input pair set to the chain form: for each
    connected component with slots p0 < p1 < ... < pk the stored pairs are
    (p0,p1), (p1,p2), ..., sorted lexicographically.  Chains generate the same
    slot-exchange group as the input pairs and are the unique form for which
    the per-slot lower-bound iteration below visits exactly one representative
    per component orbit.
    """

    inequalities: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for pair in self.inequalities:
            p, q = pair
            if not (0 <= p < q):
                raise ShapeError(f"inequality pair must satisfy 0 <= pos1 < pos2, got {pair}")
        chained: list[tuple[int, int]] = []
        for comp in _components(self.inequalities):
            chained.extend(zip(comp, comp[1:]))
        object.__setattr__(self, "inequalities", tuple(sorted(chained)))

    @property
    def positions(self) -> frozenset[int]:
        return frozenset(p for pair in self.inequalities for p in pair)

    def check_rank(self, rank: int) -> None:
        for p, q in self.inequalities:
            if q >= rank:
                raise ShapeError(f"symmetry position {q} out of range for rank {rank}")

    def lower_bound_slot(self, pos: int) -> int | None:
        """Slot whose current value bounds `pos` from below, if any."""
        for p, q in self.inequalities:
            if p == pos:
                return q
        return None

    def restricted_to(self, kept: Sequence[int]) -> "SymmetrySpec":
        """Symmetry remaining when only `kept` slots stay index-variable.

        Dropped slots are removed from each connected component; the surviving
        slots of a component stay mutually exchangeable, so they are re-chained
        rather than merely having their incident pairs deleted.
        """
        keep = set(kept)
        pairs: list[tuple[int, int]] = []
        for comp in _components(self.inequalities):
            alive = [p for p in comp if p in keep]
            pairs.extend(zip(alive, alive[1:]))
        return SymmetrySpec(tuple(pairs))


def canonical_index(sym: SymmetrySpec, idx: Sequence[int]) -> tuple[int, ...]:
    """Representative of `idx` satisfying every inequality of `sym`.

    Values are sorted in non-increasing order along each connected component
    of the inequality graph; slots outside any component are untouched.
    """
    sym.check_rank(len(idx))
    if not sym.inequalities:
        return tuple(idx)
    out = list(idx)
    for comp in _components(sym.inequalities):
        vals = sorted((out[p] for p in comp), reverse=True)
        for p, v in zip(comp, vals):
            out[p] = v
    return tuple(out)


def iter_canonical(dims: Sequence[int], sym: SymmetrySpec) -> Iterator[tuple[int, ...]]:
    """Canonical index assignments in storage order (slot 0 varies fastest).

    The loop nest runs the highest slot outermost; the lower bound of slot p
    is the maximum of the current values at every q with (p, q) an inequality,
    zero otherwise.
    """
    rank = len(dims)
    sym.check_rank(rank)
    bounds: dict[int, list[int]] = {}
    for p, q in sym.inequalities:
        bounds.setdefault(p, []).append(q)
    current = [0] * rank

    def walk(pos: int) -> Iterator[tuple[int, ...]]:
        if pos < 0:
            yield tuple(current)
            return
        lo = max((current[q] for q in bounds.get(pos, ())), default=0)
        for v in range(lo, dims[pos]):
            current[pos] = v
            yield from walk(pos - 1)

    yield from walk(rank - 1)


@lru_cache(maxsize=None)
def _slot_table(dim: int, rank: int, sym: SymmetrySpec) -> dict[tuple[int, ...], int]:
    return {idx: n for n, idx in enumerate(iter_canonical((dim,) * rank, sym))}


def component_count(dim: int, rank: int, sym: SymmetrySpec) -> int:
    """Number of canonical representatives of one index group."""
    sym.check_rank(rank)
    return len(_slot_table(dim, rank, sym))


def slot_index(dim: int, rank: int, sym: SymmetrySpec, idx: Sequence[int]) -> int:
    """Storage slot of `idx`: position of its representative in storage order."""
    if len(idx) != rank:
        raise ShapeError(f"expected {rank} index values, got {len(idx)}")
    for v in idx:
        if not (0 <= v < dim):
            raise IndexRangeError(f"index value {v} outside [0, {dim}) in {tuple(idx)}")
    return _slot_table(dim, rank, sym)[canonical_index(sym, idx)]


def alias_table(dim: int, rank: int, sym: SymmetrySpec) -> list[int]:
    """Maps every odometer-flattened multi-index (slot 0 fastest) to its slot.

    Entry f of the result is the storage slot of the multi-index whose k-th
    value is ``(f // dim**k) % dim``; symmetric images therefore alias the
    same slot.
    """
    table = _slot_table(dim, rank, sym)
    ordered = [0] * (dim**rank)
    for multi in product(range(dim), repeat=rank):
        m = tuple(reversed(multi))  # product varies the last position fastest
        flat = sum(v * dim**k for k, v in enumerate(m))
        ordered[flat] = table[canonical_index(sym, m)]
    return ordered
