"""Orientation groups, coronas, collaring and Anderson-Putnam complexes."""
from .complex import (APComplex, Cell, ComplexError, build_complex, complex_from_spec, expand,
                      quotient_complex, reduce_entry, vertex_orbit_structure)
from .coronas import (CollaredSystem, Corona, CoronaError, CoronaSet, ForcingResult, collar, collared_coronas,
                      corona_counts, enumerate_coronas, forces_border, reflection_symmetry)
from .gauge import Gauge, gauge_equivalent
from .orientation import OrientationGroup, orientation_group
from .pipeline import Built, clear_cache, content_hash, sigma_complex

__all__ = [
    "APComplex", "Cell", "ComplexError", "build_complex", "complex_from_spec", "expand", "quotient_complex",
    "reduce_entry", "vertex_orbit_structure", "CollaredSystem", "Corona", "CoronaError", "CoronaSet",
    "ForcingResult", "collar", "collared_coronas", "corona_counts", "enumerate_coronas", "forces_border", "reflection_symmetry",
    "Gauge", "gauge_equivalent", "OrientationGroup", "orientation_group",
    "Built", "clear_cache", "content_hash", "sigma_complex",
]
