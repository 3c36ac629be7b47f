"""The Perron functional on top cohomology, its order, and the comparator built on it."""
from .compare import (DISTINGUISHED, NOT_DISTINGUISHED, Verdict, compare_invariants, compare_systems,
                      system_invariant)
from .invariant import (M_MAX, OracleDisagreement, OrderedInvariant, eventually_zero, field_name,
                        is_positive, kernel_check, mu, mu_image, one_in_image, ordered_axioms_check,
                        ordered_invariant, positivity_oracle, ratio_invariance_check, well_defined_check)

__all__ = [
    "DISTINGUISHED", "NOT_DISTINGUISHED", "Verdict", "compare_invariants", "compare_systems",
    "system_invariant", "M_MAX", "OracleDisagreement", "OrderedInvariant", "eventually_zero",
    "field_name", "is_positive", "kernel_check", "mu", "mu_image", "one_in_image",
    "ordered_axioms_check", "ordered_invariant", "positivity_oracle", "ratio_invariance_check",
    "well_defined_check",
]
