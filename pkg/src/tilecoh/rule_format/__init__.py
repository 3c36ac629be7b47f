"""Reading and writing ``.tsys.json`` tiling-system files, plus the built-in fixtures."""
from .io import (
    CombinatorialComplexSpec,
    RuleFormatError,
    fixture,
    fixture_names,
    fixture_path,
    load,
    parse_system,
    serialize_system,
    systems_equal,
)

__all__ = [
    "CombinatorialComplexSpec", "RuleFormatError", "fixture", "fixture_names", "fixture_path",
    "load", "parse_system", "serialize_system", "systems_equal",
]
