"""Cohomology of Anderson-Putnam complexes and of the tiling spaces they approximate."""
from .cochain import (
    FINITE_INDEX_CAVEAT,
    CochainComplex,
    CohomologyReport,
    RepresentationRow,
    cochain_complex,
    cohomology_groups,
    decomposition,
    integral_cohomology,
    representation_table,
)
from .limits import (
    LimitElement,
    LimitGroup,
    direct_limit,
    h2_limit_group,
    induced_map,
    limit_cohomology,
    pullback_invertible,
    top_cohomology_all_orientation,
)

__all__ = [
    "FINITE_INDEX_CAVEAT", "CochainComplex", "CohomologyReport", "LimitElement", "LimitGroup",
    "RepresentationRow", "cochain_complex", "cohomology_groups", "decomposition", "direct_limit",
    "h2_limit_group", "induced_map", "integral_cohomology", "limit_cohomology",
    "pullback_invertible", "representation_table", "top_cohomology_all_orientation",
]
