"""Exact prototiles, rigid motions, patches and substitution rules."""
from .geometry import Motion, Vec, motion_taking, orient, signed_area2
from .system import (
    Patch,
    Placement,
    ProtoTile,
    SubstitutionRule,
    TilingSystem,
    TilingSystemError,
    ValidationReport,
    area_vector,
    check_decomposition,
    rotational_symmetries,
    split_edges,
    supertile,
    validate_system,
)

__all__ = [
    "Motion", "Patch", "Placement", "ProtoTile", "SubstitutionRule", "TilingSystem",
    "TilingSystemError", "ValidationReport", "Vec", "area_vector", "check_decomposition",
    "motion_taking", "orient", "rotational_symmetries", "signed_area2", "split_edges",
    "supertile", "validate_system",
]
