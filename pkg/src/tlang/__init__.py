"""Tensor statement toolkit: parse, validate, evaluate, emit C/CUDA, benchmark."""

from .fields import IndexVar, ScalarConst, ScalarField, TensorField, TensorShape
from .ir import Declarations, Statement, ValidatedStatement, count_data, signature, validate_statement
from .parser import parse_program, render
from .registry import Registry
from .symmetry import SymmetrySpec, canonical_index, component_count, iter_canonical, slot_index

__all__ = [
    "Declarations",
    "IndexVar",
    "Registry",
    "ScalarConst",
    "ScalarField",
    "Statement",
    "SymmetrySpec",
    "TensorField",
    "TensorShape",
    "ValidatedStatement",
    "canonical_index",
    "component_count",
    "count_data",
    "iter_canonical",
    "parse_program",
    "render",
    "signature",
    "slot_index",
    "validate_statement",
]
