"""Exact integer, polynomial, group-ring and algebraic-number arithmetic."""
from .group_ring import GroupRingElement, cyclotomic_factors, orbit_contains, reduce_mod_factor, representation_field
from .linalg import charpoly, determinant_int, invariant_factors, rank, smith_normal_form
from .numbers import AlgebraicNumber, FieldElement, FieldError, NumberField, rational_field
from .perron import (
    FieldEquality,
    NotPrimitiveError,
    PerronData,
    field_equal,
    is_primitive,
    is_root_of_unity,
    perron_data,
    prime_factors,
)

__all__ = [
    "AlgebraicNumber", "FieldElement", "FieldEquality", "FieldError", "GroupRingElement",
    "NotPrimitiveError", "NumberField", "PerronData", "charpoly", "cyclotomic_factors",
    "determinant_int", "field_equal", "invariant_factors", "is_primitive", "is_root_of_unity",
    "orbit_contains", "perron_data", "prime_factors", "rank", "rational_field", "reduce_mod_factor",
    "representation_field", "smith_normal_form",
]
