"""Direct limits under the substitution pullback and the cohomology of tiling spaces."""
from __future__ import annotations

from dataclasses import dataclass

import sympy
from gmpy2 import mpq

from ..exact_algebra.linalg import (determinant_int, matpow, matvec, nullspace, rank, rref, solve_in_span,
                                   transpose)
from .cochain import CochainComplex, CohomologyReport, cochain_complex, cohomology_groups


class LimitElement:
    """The class ``[(v, k)]`` of the direct limit."""

    __slots__ = ("group", "v", "k")

    def __init__(self, group: "LimitGroup", v, k: int):
        if len(v) != group.n:
            raise ValueError(f"expected a vector of length {group.n}")
        if k < 0:
            raise ValueError("level must be nonnegative")
        self.group, self.v, self.k = group, [int(x) for x in v], k

    def at_level(self, k: int) -> list:
        if k < self.k:
            raise ValueError("cannot move an element down")
        return self.group.push(self.v, k - self.k)

    def __add__(self, other: "LimitElement") -> "LimitElement":
        k = max(self.k, other.k)
        return LimitElement(self.group, [a + b for a, b in zip(self.at_level(k), other.at_level(k))], k)

    def __neg__(self) -> "LimitElement":
        return LimitElement(self.group, [-a for a in self.v], self.k)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LimitElement) or other.group is not self.group:
            return NotImplemented
        k = max(self.k, other.k)
        diff = [a - b for a, b in zip(self.at_level(k), other.at_level(k))]
        return self.group.eventually_zero(diff)

    def is_zero(self) -> bool:
        return self.group.eventually_zero(self.v)

    def __repr__(self) -> str:
        return f"[({self.v}, {self.k})]"


@dataclass
class LimitGroup:
    """``lim (Z^n, M)`` with ``(g, k) ~ (M g, k + 1)``."""

    n: int
    M: list

    def push(self, v, j: int) -> list:
        for _ in range(j):
            v = matvec(self.M, v)
        return list(v)

    def eventually_zero(self, v) -> bool:
        # the stable kernel is reached after at most n steps
        return not any(self.push(v, self.n))

    def element(self, v, k: int = 0) -> LimitElement:
        return LimitElement(self, v, k)

    @property
    def stable_kernel_exponent(self) -> int:
        prev = None
        for j in range(self.n + 1):
            r = rank(matpow(self.M, j)) if self.n else 0
            if r == prev:
                return j - 1
            prev = r
        return self.n

    @property
    def rank(self) -> int:
        return rank(matpow(self.M, self.n)) if self.n else 0

    def to_json(self) -> dict:
        return {"approximant_rank": self.n, "rank": self.rank, "stable_kernel_exponent": self.stable_kernel_exponent}


def direct_limit(n: int, M) -> LimitGroup:
    M = [[int(x) for x in r] for r in M]
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError("M must be n x n")
    return LimitGroup(n, M)


# --------------------------------------------------------------------------

def induced_map(cc: CochainComplex, deg: int):
    """Matrix of ``phi*`` on ``H^deg (x) Q`` in a basis of representatives, and those representatives."""
    n = cc.dim(deg)
    one, zero = mpq(1), mpq(0)
    if deg < 2 and cc.dim(deg + 1):
        D = [[mpq(x) for x in r] for r in cc.z_delta(deg)]
        ker = nullspace(D, zero, one)
    else:
        ker = [[one if i == j else zero for i in range(n)] for j in range(n)]
    img = []
    if deg > 0 and cc.dim(deg - 1):
        P = transpose(cc.z_delta(deg - 1))
        R, piv = rref([[mpq(x) for x in r] for r in P])
        img = [R[i] for i in range(len(piv))]
    basis = list(img)
    reps = []
    for v in ker:
        if solve_in_span(basis, v, zero) is None:
            basis.append(v)
            reps.append(v)
    F = [[mpq(x) for x in r] for r in cc.z_pullback(deg)]
    A = []
    for w in reps:
        c = solve_in_span(basis, matvec(F, w), zero)
        A.append(c[len(img):])
    return transpose(A) if A else [], reps


def pullback_invertible(cc: CochainComplex) -> dict:
    """Per representation and degree: is ``phi*`` invertible on the cochains of that summand."""
    from ..exact_algebra.group_ring import reduce_mod_factor
    from ..exact_algebra import poly
    out = {}
    for d in poly.divisors(cc.N):
        phi = list(poly.cyclotomic(d))
        for k in range(3):
            orb = cc.complex.orbits(k)
            M, r = reduce_mod_factor(cc.pullback[k], phi, orb, orb)
            out[(d, k)] = r == len(M)
    return out


def _rational_det(A) -> int:
    d = sympy.Matrix([[sympy.Rational(int(x.numerator), int(x.denominator)) for x in r] for r in A]).det()
    # phi* preserves the integer lattice of H^k mod torsion, so the determinant is an integer
    return int(d)


def limit_cohomology(source) -> CohomologyReport:
    """Cohomology of the tiling space as the direct limit of ``H(Sigma)`` under ``phi*``."""
    cc = source if isinstance(source, CochainComplex) else cochain_complex(source)
    rep = cohomology_groups(cc)
    inv = pullback_invertible(cc)
    if all(inv.values()):
        rep.branch = "isomorphism"
        unimodular, dets = {}, {}
        for k in range(3):
            unimodular[k] = abs(determinant_int(cc.z_pullback(k))) == 1 if cc.dim(k) else True
            A, reps = induced_map(cc, k)
            dets[k] = _rational_det(A) if reps else 1
        rep.extra["pullback_invertible"] = {f"d={d},deg={k}": v for (d, k), v in sorted(inv.items())}
        rep.extra["pullback_unimodular"] = unimodular
        rep.extra["induced_determinant"] = dets
        # an integer matrix of determinant +-1 is invertible over Z on the free part
        rep.extra["limit_equals_approximant"] = all(abs(d) == 1 for d in dets.values())
        if not rep.extra["limit_equals_approximant"]:
            bad = [k for k, d in dets.items() if abs(d) != 1]
            rep.caveats.append(f"phi* is invertible over Q but not over Z in degrees {bad}: the limit has the "
                               "same rational ranks but is a localization of the approximant there")
        return rep
    rep.branch = "direct_limit"
    ranks = []
    for k in range(3):
        A, reps = induced_map(cc, k)
        r = len(reps)
        ranks.append(rank(matpow(A, r)) if r else 0)
    rep.extra["limit_free_rank"] = ranks
    rep.extra["limit_presentation"] = {
        "degree_2": {"approximant": "C^2", "map": "phi_2^*", "modulo": "image of delta^1",
                     "approximant_rank": cc.dim(2)},
    }
    rep.extra["pullback_invertible"] = {f"d={d},deg={k}": v for (d, k), v in sorted(inv.items())}
    rep.caveats.append("direct limit: presentation and rational rank only, torsion not classified")
    rep.free_rank_limit = ranks
    return rep


def h2_limit_group(cc: CochainComplex) -> LimitGroup:
    """``lim (C^2, phi_2^*)``; top cohomology is its quotient by coboundaries."""
    return direct_limit(cc.dim(2), cc.z_pullback(2))


def top_cohomology_all_orientation(sigma0_report: CohomologyReport) -> dict:
    """``H^3`` of the all-orientation space from ``H^2`` of the quotient complex."""
    if sigma0_report.variant != "0":
        raise ValueError("expects the cohomology of Sigma_0")
    r = sigma0_report.extra.get("limit_free_rank", sigma0_report.free_rank)[2]
    return {"degree": 3, "free_rank": r,
            "group": ("Z" if r == 1 else f"Z^{r}") if r else "0",
            "torsion": sigma0_report.torsion[2] if sigma0_report.extra.get("limit_equals_approximant") else None,
            "source": "H^2 of the rotation quotient",
            "caveats": ["isomorphic up to finite extension (rotationally invariant part of the top cohomology)"]}
