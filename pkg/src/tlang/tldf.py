"""TLDF binary field container.

Layout (all little-endian, floats IEEE-754 binary64):

    bytes 0-7   ASCII magic "TLDF0001"
    u32         field count
    per field:
      u16       name length, then that many UTF-8 name bytes
      u8        kind: 0 const, 1 scalar field, 2 tensor field
      kind 0:   one f64
      kind 1-2: u8 dim (0 for kind 1), u8 outer rank, u8 inner rank,
                u8 outer inequality count then (u8,u8) pairs,
                u8 inner inequality count then pairs,
                u64 gridsize N,
                component arrays in (outer slot major, inner slot minor)
                order, each N f64
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .fields import FieldLike, ScalarConst, ScalarField, TensorField, TensorShape
from .symmetry import SymmetrySpec

MAGIC = b"TLDF0001"


class TldfError(ValueError):
    """Malformed container: bad magic, truncated payload, or invalid shape."""


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise TldfError(
                f"truncated container: wanted {n} bytes at offset {self.pos}, "
                f"have {len(self.data) - self.pos}"
            )
        out = self.data[self.pos : self.pos + n]
        self.pos += n
        return out

    def u8(self) -> int:
        return self.take(1)[0]

    def u16(self) -> int:
        return struct.unpack("<H", self.take(2))[0]

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def f64(self) -> float:
        return struct.unpack("<d", self.take(8))[0]


def _read_pairs(r: _Reader) -> SymmetrySpec:
    count = r.u8()
    pairs = []
    for _ in range(count):
        pairs.append((r.u8(), r.u8()))
    try:
        return SymmetrySpec(tuple(pairs))
    except ValueError as exc:
        raise TldfError(f"invalid symmetry pairs {pairs}: {exc}") from exc


def loads(data: bytes) -> dict[str, FieldLike]:
    if data[:8] != MAGIC:
        raise TldfError(f"bad magic {data[:8]!r}, expected {MAGIC!r}")
    r = _Reader(data)
    r.take(8)
    count = r.u32()
    fields: dict[str, FieldLike] = {}
    for _ in range(count):
        name = r.take(r.u16()).decode("utf-8")
        kind = r.u8()
        if kind == 0:
            fields[name] = ScalarConst(name, r.f64())
            continue
        if kind not in (1, 2):
            raise TldfError(f"field {name!r}: unknown kind {kind}")
        dim = r.u8()
        outer_rank = r.u8()
        inner_rank = r.u8()
        outer_sym = _read_pairs(r)
        inner_sym = _read_pairs(r)
        n = r.u64()
        if kind == 1:
            field = ScalarField(name, n)
            raw = r.take(8 * n)
            field.data[:] = np.frombuffer(raw, dtype="<f8")
            fields[name] = field
        else:
            try:
                shape = TensorShape(dim, outer_rank, outer_sym, inner_rank, inner_sym)
            except ValueError as exc:
                raise TldfError(f"field {name!r}: {exc}") from exc
            field = TensorField(name, shape, n)
            raw = r.take(8 * n * shape.n_components)
            block = np.frombuffer(raw, dtype="<f8").reshape(
                shape.outer_count, shape.inner_count, n
            )
            field.data[:] = block
            fields[name] = field
    if r.pos != len(data):
        raise TldfError(f"{len(data) - r.pos} trailing bytes after the last field")
    return fields


def dumps(fields: dict[str, FieldLike]) -> bytes:
    out = bytearray(MAGIC)
    out += struct.pack("<I", len(fields))
    for name, field in fields.items():
        encoded = name.encode("utf-8")
        out += struct.pack("<H", len(encoded)) + encoded
        if isinstance(field, ScalarConst):
            out += bytes([0]) + struct.pack("<d", field.value)
        elif isinstance(field, ScalarField):
            out += bytes([1, 0, 0, 0, 0, 0])
            out += struct.pack("<Q", field.gridsize)
            out += field.data.astype("<f8").tobytes()
        elif isinstance(field, TensorField):
            s = field.shape
            out += bytes([2, s.dim, s.outer_rank, s.inner_rank])
            out += bytes([len(s.outer_sym.inequalities)])
            for p, q in s.outer_sym.inequalities:
                out += bytes([p, q])
            out += bytes([len(s.inner_sym.inequalities)])
            for p, q in s.inner_sym.inequalities:
                out += bytes([p, q])
            out += struct.pack("<Q", field.gridsize)
            out += field.data.astype("<f8").tobytes()
        else:
            raise TldfError(f"cannot serialize {type(field).__name__}")
    return bytes(out)


def read(path: str | Path) -> dict[str, FieldLike]:
    return loads(Path(path).read_bytes())


def write(path: str | Path, fields: dict[str, FieldLike]) -> None:
    Path(path).write_bytes(dumps(fields))
