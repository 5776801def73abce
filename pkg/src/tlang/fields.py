"""Gridded field containers with symmetry-aware canonical component storage."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .symmetry import ShapeError, SymmetrySpec, component_count, slot_index


@dataclass(frozen=True)
class TensorShape:
    """Dimension plus outer and optional inner index-group structure.

    Every slot of the field shares the single index range [0, dim); the inner
    group models nested tensors such as a spatial derivative attached to each
    outer component.
    """

    dim: int
    outer_rank: int
    outer_sym: SymmetrySpec = SymmetrySpec()
    inner_rank: int = 0
    inner_sym: SymmetrySpec = SymmetrySpec()

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ShapeError(f"dimension must be positive, got {self.dim}")
        if self.outer_rank < 1:
            raise ShapeError("tensor fields have outer rank >= 1")
        if self.inner_rank < 0:
            raise ShapeError("inner rank must be non-negative")
        self.outer_sym.check_rank(self.outer_rank)
        self.inner_sym.check_rank(self.inner_rank)

    @property
    def outer_count(self) -> int:
        return component_count(self.dim, self.outer_rank, self.outer_sym)

    @property
    def inner_count(self) -> int:
        return component_count(self.dim, self.inner_rank, self.inner_sym)

    @property
    def n_components(self) -> int:
        return self.outer_count * self.inner_count


@dataclass(frozen=True)
class IndexVar:
    """A symbolic loop index: identity is the name, range is [0, dim)."""

    name: str
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ShapeError(f"index {self.name!r} must have positive dimension")


class TensorField:
    """Named gridded tensor: one length-N array per canonical component pair.

    Component arrays are stored as a (outer_count, inner_count, N) block;
    indexing with any multi-index resolves through canonicalization, so
    symmetric images read and write the same storage.
    """

    def __init__(self, name: str, shape: TensorShape, gridsize: int = 0):
        if gridsize < 0:
            raise ShapeError("gridsize must be non-negative")
        self.name = name
        self.shape = shape
        self.data = np.zeros((shape.outer_count, shape.inner_count, gridsize))

    @property
    def gridsize(self) -> int:
        return self.data.shape[2]

    def resize(self, gridsize: int) -> None:
        """Reallocate all component arrays to length `gridsize`, zero-filled."""
        if gridsize != self.gridsize:
            self.data = np.zeros((self.shape.outer_count, self.shape.inner_count, gridsize))

    def slots(self, outer: Sequence[int], inner: Sequence[int] = ()) -> tuple[int, int]:
        s = self.shape
        return (
            slot_index(s.dim, s.outer_rank, s.outer_sym, outer),
            slot_index(s.dim, s.inner_rank, s.inner_sym, inner),
        )

    def component(self, outer: Sequence[int], inner: Sequence[int] = ()) -> np.ndarray:
        """View of the component array addressed by (outer, inner)."""
        o, i = self.slots(outer, inner)
        return self.data[o, i]

    def set_component(self, outer: Sequence[int], values, inner: Sequence[int] = ()) -> None:
        o, i = self.slots(outer, inner)
        self.data[o, i] = values

    def __repr__(self) -> str:
        s = self.shape
        return (
            f"TensorField({self.name!r}, dim={s.dim}, ranks=({s.outer_rank},{s.inner_rank}), "
            f"components={s.n_components}, N={self.gridsize})"
        )


class ScalarField:
    """Named grid array: one value per grid point."""

    def __init__(self, name: str, gridsize: int = 0):
        self.name = name
        self.data = np.zeros(gridsize)

    @property
    def gridsize(self) -> int:
        return self.data.shape[0]

    def resize(self, gridsize: int) -> None:
        if gridsize != self.gridsize:
            self.data = np.zeros(gridsize)

    def __repr__(self) -> str:
        return f"ScalarField({self.name!r}, N={self.gridsize})"


@dataclass
class ScalarConst:
    """Named bare number from a `const` declaration."""

    name: str
    value: float


FieldLike = TensorField | ScalarField | ScalarConst
