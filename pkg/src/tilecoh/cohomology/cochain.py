"""Cochain complexes and their cohomology, over Z and one representation at a time."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..complex_builder.complex import APComplex, reduce_entry
from ..exact_algebra import poly
from ..exact_algebra.group_ring import orbit_contains, reduce_mod_factor
from ..exact_algebra.linalg import invariant_factors, matmul, transpose

FINITE_INDEX_CAVEAT = "up to finite index: representation-wise ranks do not see torsion or extensions"


@dataclass
class CochainComplex:
    """``C^0 -> C^1 -> C^2`` with coboundaries the transposes of the boundaries under ``t -> t^-1``."""

    complex: APComplex
    delta: dict  # 0: |E| x |V|, 1: |F| x |E| group-ring matrices
    pullback: dict  # i -> |C^i| x |C^i|

    @property
    def N(self) -> int:
        return self.complex.N

    def cells(self, deg: int) -> list:
        return self.complex.cells(deg)

    def z_delta(self, deg: int) -> list:
        """Integer coboundary ``C^deg -> C^(deg+1)`` in the dual bases ``(t^a c)^*``."""
        return transpose(self.complex.z_boundary(deg + 1))

    def z_pullback(self, deg: int) -> list:
        return transpose(self.complex.z_subst(deg))

    def dim(self, deg: int) -> int:
        return self.complex.rank(deg)


def _star(M, rows) -> list:
    """Transpose with ``t -> t^-1``, entries reduced in the summand of their new row."""
    T = transpose(M)
    return [[reduce_entry(e.involution(), rows[i]) for e in r] for i, r in enumerate(T)]


def cochain_complex(cx: APComplex, verify: bool = True) -> CochainComplex:
    delta = {0: _star(cx.boundary[1], cx.edges), 1: _star(cx.boundary[2], cx.faces)}
    pull = {k: _star(M, cx.cells(k)) for k, M in cx.subst.items()}
    cc = CochainComplex(cx, delta, pull)
    if verify:
        chk = cx.check()
        if not chk["ok"]:
            raise AssertionError(f"complex fails its identities: {chk}")
        d0, d1 = cc.z_delta(0), cc.z_delta(1)
        if d0 and d0[0] and d1 and d1[0] and any(any(r) for r in matmul(d1, d0)):
            raise AssertionError("delta^1 delta^0 != 0")
    return cc


# --------------------------------------------------------------------------

@dataclass
class RepresentationRow:
    d: int
    phi: list  # ascending coefficients of Phi_d
    dims: tuple  # dimension of C^0, C^1, C^2 in this representation
    rank_delta0: int
    rank_delta1: int

    @property
    def h(self) -> tuple:
        c0, c1, c2 = self.dims
        r0, r1 = self.rank_delta0, self.rank_delta1
        return (c0 - r0, c1 - r1 - r0, c2 - r1)

    def to_json(self) -> dict:
        return {"d": self.d, "phi": poly.format_poly(self.phi, "t"), "degree": len(self.phi) - 1,
                "dims": list(self.dims), "rank_delta0": self.rank_delta0, "rank_delta1": self.rank_delta1,
                "h": list(self.h)}


@dataclass
class CohomologyReport:
    system: str
    variant: str
    free_rank: list  # H^0, H^1, H^2
    torsion: list  # invariant factors > 1 per degree
    representations: list = field(default_factory=list)
    decomposition: list = field(default_factory=list)
    caveats: list = field(default_factory=list)
    branch: str | None = None
    extra: dict = field(default_factory=dict)

    def group(self, deg: int) -> str:
        parts = []
        r = self.free_rank[deg]
        if r:
            parts.append("Z" if r == 1 else f"Z^{r}")
        parts += [f"Z/{d}" for d in self.torsion[deg]]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"system": self.system, "variant": self.variant,
                "H": [{"degree": i, "free_rank": self.free_rank[i], "torsion": self.torsion[i],
                       "group": self.group(i)} for i in range(3)],
                "representations": [r.to_json() for r in self.representations],
                "decomposition": self.decomposition, "caveats": self.caveats, "branch": self.branch,
                **self.extra}


def integral_cohomology(cc: CochainComplex) -> tuple[list, list]:
    """Free ranks and torsion of ``H^0, H^1, H^2`` over Z (Smith normal form)."""
    dims = [cc.dim(i) for i in range(3)]
    ranks, tors = [], []
    for i in range(2):
        M = cc.z_delta(i)
        if not M or not M[0]:
            ranks.append(0)
            tors.append([])
            continue
        f = invariant_factors(M)
        ranks.append(sum(1 for x in f if x))
        tors.append([abs(x) for x in f if abs(x) > 1])
    free = [dims[0] - ranks[0], dims[1] - ranks[1] - ranks[0], dims[2] - ranks[1]]
    return free, [[], tors[0], tors[1]]


def representation_table(cc: CochainComplex) -> list[RepresentationRow]:
    N = cc.N
    rows = []
    orb = {k: cc.complex.orbits(k) for k in range(3)}
    for d in poly.divisors(N):
        phi = list(poly.cyclotomic(d))
        dims = tuple(sum(1 for o in orb[k] if orbit_contains(d, o)) for k in range(3))
        r0 = reduce_mod_factor(cc.delta[0], phi, orb[1], orb[0])[1] if cc.delta[0] and cc.delta[0][0] else 0
        r1 = reduce_mod_factor(cc.delta[1], phi, orb[2], orb[1])[1] if cc.delta[1] and cc.delta[1][0] else 0
        rows.append(RepresentationRow(d, phi, dims, r0, r1))
    return rows


def _module_name(d: int, phi: list) -> str:
    return f"Z[t]/({poly.format_poly(phi, 't')})"


def decomposition(rows: list[RepresentationRow], N: int) -> list[str]:
    out = []
    for deg in range(3):
        parts = []
        for r in rows:
            m = r.h[deg]
            if m:
                name = _module_name(r.d, r.phi) if N > 1 else "Z"
                parts.append(name if m == 1 else f"({name})^{m}")
        out.append(" ⊕ ".join(parts) or "0")
    return out


def cohomology_groups(source, coefficients="Z") -> CohomologyReport:
    """Cohomology of an Anderson-Putnam complex.

    ``coefficients="Z"`` gives free ranks and torsion (Smith normal form) plus
    the representation table; ``coefficients=d`` restricts the table to the
    representation ``Phi_d``.
    """
    cc = source if isinstance(source, CochainComplex) else cochain_complex(source)
    cx = cc.complex
    free, tors = integral_cohomology(cc)
    rows = representation_table(cc)
    if coefficients != "Z":
        d = int(coefficients)
        if d < 1 or cx.N % d:
            raise ValueError(f"coefficients must be 'Z' or a divisor of {cx.N}, got {coefficients!r}")
        rows = [r for r in rows if r.d == d]
    caveats = []
    if cx.N > 1:
        caveats.append(FINITE_INDEX_CAVEAT)
        for deg in range(3):
            tot = sum((len(r.phi) - 1) * r.h[deg] for r in representation_table(cc))
            if tot != free[deg]:
                raise AssertionError(f"representation ranks do not add up in degree {deg}")
    return CohomologyReport(cx.system, cx.variant, free, tors, rows, decomposition(rows, cx.N), caveats)
