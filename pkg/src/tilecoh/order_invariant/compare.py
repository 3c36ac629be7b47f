"""Comparing two tiling spaces through the Perron eigenvalues of their ordered top cohomology."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..complex_builder.pipeline import sigma_complex
from ..exact_algebra.perron import field_equal
from .invariant import OrderedInvariant, field_name, mu_image, ordered_invariant

DISTINGUISHED = "Distinguished"
NOT_DISTINGUISHED = "NotDistinguished"


@dataclass
class Verdict:
    outcome: str
    reason: str
    evidence: dict = field(default_factory=dict)

    @property
    def distinguished(self) -> bool:
        return self.outcome == DISTINGUISHED

    @property
    def inconclusive(self) -> bool:
        # matching invariants only give a necessary condition
        return not self.distinguished

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "reason": self.reason, "inconclusive": self.inconclusive,
                "evidence": self.evidence}


def _fmt_set(ps) -> str:
    return "{" + ", ".join(str(p) for p in ps) + "}"


def compare_invariants(A: OrderedInvariant, B: OrderedInvariant) -> Verdict:
    ia, ib = mu_image(A), mu_image(B)
    ev = {"A": {"name": A.name, **ia}, "B": {"name": B.name, **ib}}
    if A.is_integer and B.is_integer:
        pa, pb = ia["primes"], ib["primes"]
        if pa != pb:
            return Verdict(DISTINGUISHED, f"prime sets {_fmt_set(pa)} ≠ {_fmt_set(pb)}", ev)
        return Verdict(NOT_DISTINGUISHED, f"same prime set {_fmt_set(pa)}: invariant agrees, inconclusive", ev)
    if A.is_integer != B.is_integer:
        which = "A" if A.is_integer else "B"
        return Verdict(DISTINGUISHED, f"integer vs irrational Perron eigenvalue (integer on side {which})", ev)
    eq = field_equal(A.lam, B.lam)
    ev["field_equal"] = bool(eq)
    if eq:
        ev["B_lambda_in_Q(A_lambda)"] = eq.b_in_a.to_json()
        return Verdict(NOT_DISTINGUISHED,
                       f"same field {field_name(A.lam)}: invariant agrees, inconclusive", ev)
    return Verdict(DISTINGUISHED, f"fields {field_name(A.lam)} ≠ {field_name(B.lam)}", ev)


def system_invariant(sys, collared: bool = True) -> OrderedInvariant:
    """Ordered invariant of ``Sigma_0`` of a loaded system."""
    built = sigma_complex(sys, "0", collared)
    return ordered_invariant(built.complex, sys.name)


def compare_systems(A, B, collared: bool = True) -> Verdict:
    """Necessary conditions for the tiling spaces of ``A`` and ``B`` to be homeomorphic."""
    return compare_invariants(system_invariant(A, collared), system_invariant(B, collared))
