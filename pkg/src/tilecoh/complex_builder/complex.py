"""Anderson-Putnam complexes with group-ring boundary and substitution matrices.

Cells of ``Sigma_x`` are (type, orientation, index) slots glued whenever two
tiles meet inside a corona; the gluing commutes with the rotation action, so
it is done once on base slots with a union-find that records, for every slot,
the relation ``slot = eps * t^s * root``.  A class may end up related to
itself: ``root = eps * t^s * root``.  Those relations generate its
stabilizer, which fixes the summand ``Z[t]/(t^k - eps)``; a class equal to
its own negative at ``k = 0`` is a folded edge and is contracted.

``Sigma_0`` is the same construction with every orientation identified
(``N = 1``), the matrices then being integer matrices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..exact_algebra.group_ring import GroupRingElement
from ..exact_algebra.linalg import matmul
from ..tiling_model.geometry import on_closed_segment
from ..tiling_model.system import supertile
from .coronas import CollaredSystem, CoronaSet, collared_coronas, enumerate_coronas
from .orientation import OrientationGroup, orientation_group


class ComplexError(ValueError):
    """Requested complex cannot be built (e.g. ``Sigma_x`` with infinite orientation group)."""


@dataclass(frozen=True)
class Cell:
    name: str
    orbit: int  # k: summand Z[t]/(t^k - sign)
    sign: int = 1

    @property
    def summand(self) -> str:
        if self.orbit == 1 and self.sign == 1:
            return "Z"
        return f"Z[t]/(t^{self.orbit} {'-' if self.sign == 1 else '+'} 1)"


@dataclass
class APComplex:
    system: str
    variant: str  # "x" (fixed orientation, Sigma_x) or "0" (Sigma_0)
    N: int
    faces: list
    edges: list
    vertices: list
    boundary: dict  # 1: |V| x |E|, 2: |E| x |F| (GroupRingElement entries)
    subst: dict  # 0, 1, 2: square matrices, column = image of that cell
    face_types: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def cells(self, deg: int) -> list:
        return {0: self.vertices, 1: self.edges, 2: self.faces}[deg]

    def orbits(self, deg: int) -> list:
        return [(c.orbit, c.sign) for c in self.cells(deg)]

    def rank(self, deg: int) -> int:
        """Rank over Z of the chain group ``C_deg``."""
        return sum(c.orbit for c in self.cells(deg))

    # -- integer expansion -----------------------------------------------
    def z_boundary(self, deg: int) -> list:
        return expand(self.boundary[deg], self.cells(deg - 1), self.cells(deg))

    def z_subst(self, deg: int) -> list:
        return expand(self.subst[deg], self.cells(deg), self.cells(deg))

    def face_count_matrix(self) -> list:
        """``subst_2`` at ``t = 1``: counts of child faces (columns are parents)."""
        return [[e.augmentation() for e in row] for row in self.subst[2]]

    def check(self) -> dict:
        """Exact verification of ``d1 d2 = 0`` and the chain-map identities (over Z)."""
        d1, d2 = self.z_boundary(1), self.z_boundary(2)
        p0, p1, p2 = self.z_subst(0), self.z_subst(1), self.z_subst(2)
        out = {
            "d1d2_zero": _all_zero(matmul(d1, d2)) if d1 and d2 and d1[0] else True,
            "chain_map_2": matmul(d2, p2) == matmul(p1, d2) if d2 and d2[0] else True,
            "chain_map_1": matmul(d1, p1) == matmul(p0, d1) if d1 and d1[0] else True,
        }
        out["ok"] = all(out.values())
        return out

    def to_json(self) -> dict:
        def cells(cs):
            return [{"name": c.name, "orbit": c.orbit, "sign": c.sign} for c in cs]

        def mat(M):
            return [[e.to_json() for e in r] for r in M]

        return {
            "system": self.system, "variant": "Sigma_x" if self.variant == "x" else "Sigma_0",
            "ring": f"Z[t]/(t^{self.N} - 1)" if self.N > 1 else "Z", "group_order": self.N,
            "cells": {"faces": cells(self.faces), "edges": cells(self.edges), "vertices": cells(self.vertices)},
            "boundary_matrices": {str(k): mat(v) for k, v in sorted(self.boundary.items())},
            "substitution_matrices": {str(k): mat(v) for k, v in sorted(self.subst.items())},
            "notes": self.notes,
        }


def _all_zero(M) -> bool:
    return all(not x for row in M for x in row)


def reduce_entry(e: GroupRingElement, cell: Cell) -> GroupRingElement:
    """Canonical form of ``e`` in ``Z[t]/(t^k - sign)`` (coefficients on ``t^0..t^{k-1}``)."""
    N = e.order
    out = [0] * N
    for i, a in enumerate(e.coeffs):
        if a:
            q, r = divmod(i, cell.orbit)
            out[r] += a * (cell.sign ** q)
    return GroupRingElement(out)


def expand(M, rows: list, cols: list) -> list:
    """Integer matrix of a group-ring matrix in the bases ``t^a * cell``."""
    roff, coff = _offsets(rows), _offsets(cols)
    Z = [[0] * coff[-1] for _ in range(roff[-1])]
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            e = M[i][j]
            if not e:
                continue
            for b in range(c.orbit):
                for p, a in enumerate(e.coeffs):
                    if a:
                        q, rr = divmod(p + b, r.orbit)
                        Z[roff[i] + rr][coff[j] + b] += a * (r.sign ** q)
    return Z


def _offsets(cells) -> list:
    out = [0]
    for c in cells:
        out.append(out[-1] + c.orbit)
    return out


# --------------------------------------------------------------------------
# equivariant union-find

class _ShiftUnionFind:
    """Union-find on base slots with relations ``x = eps * t^s * y`` in ``Z[Z_N] x {+-1}``."""

    def __init__(self, N: int):
        self.N = N
        self.parent = {}
        self.stab = {}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = (x, 0, 1)
            self.stab[x] = []

    def find(self, x):
        p, s, e = self.parent[x]
        if p == x:
            return x, 0, 1
        r, s2, e2 = self.find(p)
        res = (r, (s + s2) % self.N, e * e2)
        self.parent[x] = res
        return res

    def union(self, x, y, s: int, eps: int) -> None:
        """Record ``x = eps * t^s * y``."""
        self.add(x)
        self.add(y)
        rx, sx, ex = self.find(x)
        ry, sy, ey = self.find(y)
        # rx = ex^-1 t^-sx x = ex eps ey t^(s + sy - sx) ry
        shift, sign = (s + sy - sx) % self.N, ex * eps * ey
        if rx == ry:
            if (shift, sign) != (0, 1):
                self.stab[rx].append((shift, sign))
            return
        self.parent[rx] = (ry, shift, sign)
        self.stab[ry].extend(self.stab.pop(rx))

    def classes(self) -> dict:
        out = {}
        for x in self.parent:
            r, s, e = self.find(x)
            out.setdefault(r, []).append((x, s, e))
        return out


def _stabilizer(N: int, gens) -> tuple[int, int] | None:
    """``(k, eps)`` with the stabilizer generated by ``t^k = eps``; ``None`` if it contains ``-1``."""
    H = {(0, 1)}
    frontier = [(0, 1)]
    while frontier:
        s, e = frontier.pop()
        for g, f in gens:
            h = ((s + g) % N, e * f)
            if h not in H:
                H.add(h)
                frontier.append(h)
    if (0, -1) in H:
        return None
    k = N
    for s, _ in H:
        k = math.gcd(k, s)
    sign = next(e for s, e in H if s == k % N)
    return k, sign


# --------------------------------------------------------------------------

def build_complex(source, variant: str = "x", coronas: CoronaSet | None = None,
                  orientation: OrientationGroup | None = None) -> APComplex:
    """Build ``Sigma_x`` (``variant="x"``) or ``Sigma_0`` (``variant="0"``).

    ``source`` is a geometric :class:`TilingSystem` (uncollared complex) or a
    :class:`CollaredSystem`.  Gluings come from the first coronas of the
    system whose tiles are the cells.
    """
    sys = source.system if isinstance(source, CollaredSystem) else source
    if variant not in ("x", "0"):
        raise ValueError("variant must be 'x' or '0'")
    G = orientation or orientation_group(sys)
    if variant == "x" and not G.finite:
        raise ComplexError("Sigma_x is not compact for an infinite orientation group; use Sigma_0")
    N = G.order if variant == "x" else 1
    if coronas is None:
        coronas = collared_coronas(source) if isinstance(source, CollaredSystem) else enumerate_coronas(sys)
    cs = coronas
    types = sys.types
    tindex = {t: i for i, t in enumerate(types)}

    def k_of(center, t, rot) -> int:
        # absolute rotation of a neighbour when the centre sits at a_center
        return G.relative_index(t, G.base[center].cmul(rot)) % N if N > 1 else 0

    E = _ShiftUnionFind(N)
    V = _ShiftUnionFind(N)
    for t in types:
        for j in range(sys.tile(t).n):
            E.add((tindex[t], j))
            V.add((tindex[t], j))
    for c in cs.all():
        T = c.center
        proto = sys.tile(T)
        cverts = proto.vertices
        cedges = {(cverts[j].key(), cverts[(j + 1) % proto.n].key()): j for j in range(proto.n)}
        cpts = {v.key(): j for j, v in enumerate(cverts)}
        for S, m in c.tiles[1:]:
            k = k_of(T, S, m.rot)
            vs = sys.tile(S).placed(m)
            n = len(vs)
            for l in range(n):
                j = cpts.get(vs[l].key())
                if j is not None:
                    V.union((tindex[T], j), (tindex[S], l), k, 1)
                j = cedges.get((vs[(l + 1) % n].key(), vs[l].key()))
                if j is not None:
                    E.union((tindex[T], j), (tindex[S], l), k, -1)

    ecells, eslot = _classes(E, N, types, "e", allow_fold=True)
    vcells, vslot = _classes(V, N, types, "v", allow_fold=False)
    fcells = [Cell(t, N, 1) for t in types]
    zero = GroupRingElement.zero(N)

    def mono(k, sign=1):
        return GroupRingElement.monomial(N, k % N, sign)

    # boundary matrices
    d2 = [[zero] * len(fcells) for _ in ecells]
    for fi, t in enumerate(types):
        for j in range(sys.tile(t).n):
            hit = eslot.get((fi, j))
            if hit is not None:
                ei, s, e = hit
                d2[ei][fi] = d2[ei][fi] + mono(s, e)
    d1 = [[zero] * len(ecells) for _ in vcells]
    for ei, cell in enumerate(ecells):
        fi, j = cell._rep
        n = sys.tile(types[fi]).n
        for vj, sgn in (((j + 1) % n, 1), (j, -1)):
            vi, s, _ = vslot[(fi, vj)]
            d1[vi][ei] = d1[vi][ei] + mono(s, sgn)

    # substitution matrices
    c = sys.c
    p2 = [[zero] * len(fcells) for _ in fcells]
    p1 = [[zero] * len(ecells) for _ in ecells]
    p0 = [[zero] * len(vcells) for _ in vcells]
    for fi, t in enumerate(types):
        kids = supertile(sys, t, 1)
        deltas = [k_of(t, pt.type, pt.motion.rot) for pt in kids.tiles]
        for pt, dl in zip(kids.tiles, deltas):
            ci = tindex[pt.type]
            p2[ci][fi] = p2[ci][fi] + mono(dl)
        proto = sys.tile(t)
        for ei, cell in enumerate(ecells):
            if cell._rep[0] != fi:
                continue
            j = cell._rep[1]
            a, b = proto.vertices[j].scale(c), proto.vertices[(j + 1) % proto.n].scale(c)
            for pt, dl in zip(kids.tiles, deltas):
                vs = pt.vertices
                for l in range(len(vs)):
                    x, y = vs[l], vs[(l + 1) % len(vs)]
                    if on_closed_segment(x, a, b) and on_closed_segment(y, a, b) and (y - x).dot(b - a).sign() > 0:
                        hit = eslot.get((tindex[pt.type], l))
                        if hit is not None:
                            ej, s, e = hit
                            p1[ej][ei] = p1[ej][ei] + mono(s + dl, e)
        for vi, cell in enumerate(vcells):
            if cell._rep[0] != fi:
                continue
            p = proto.vertices[cell._rep[1]].scale(c)
            for pt, dl in zip(kids.tiles, deltas):
                l = next((l for l, v in enumerate(pt.vertices) if v == p), None)
                if l is not None:
                    vj, s, _ = vslot[(tindex[pt.type], l)]
                    p0[vj][vi] = p0[vj][vi] + mono(s + dl)
                    break

    d1 = [[reduce_entry(e, vcells[i]) for e in row] for i, row in enumerate(d1)]
    d2 = [[reduce_entry(e, ecells[i]) for e in row] for i, row in enumerate(d2)]
    p0 = [[reduce_entry(e, vcells[i]) for e in row] for i, row in enumerate(p0)]
    p1 = [[reduce_entry(e, ecells[i]) for e in row] for i, row in enumerate(p1)]
    folded = sum(1 for _ in E.classes()) - len(ecells)
    cx = APComplex(sys.name, variant, N, fcells, [_plain(x) for x in ecells], [_plain(x) for x in vcells],
                   {1: d1, 2: d2}, {0: p0, 1: p1, 2: p2}, list(types),
                   {"corona_method": cs.method, "coronas": cs.count(), "folded_edges": folded,
                    "orientation_group": G.order if G.finite else "infinite"})
    return cx


def _plain(c) -> Cell:
    return Cell(c.name, c.orbit, c.sign)


def _classes(uf: _ShiftUnionFind, N: int, types: list, prefix: str, allow_fold: bool):
    """Cells (with representative slot) and slot -> (cell index, shift, sign)."""
    cells, slot = [], {}
    reps = []
    for root, members in uf.classes().items():
        st = _stabilizer(N, uf.stab[root])
        if st is None:
            if not allow_fold:
                raise ComplexError("a vertex class is identified with its own negative")
            continue
        rep, s_r, e_r = min(members)
        reps.append((rep, st, members, s_r, e_r))
    reps.sort()
    for ci, (rep, (k, sign), members, s_r, e_r) in enumerate(reps):
        cell = Cell(f"{types[rep[0]]}:{prefix}{rep[1]}", k, sign)
        object.__setattr__(cell, "_rep", rep)
        cells.append(cell)
        for x, s, e in members:
            # x = e t^s root and rep = e_r t^s_r root, so x = e e_r t^(s - s_r) rep
            slot[x] = (ci, (s - s_r) % N, e * e_r)
    return cells, slot


def vertex_orbit_structure(cx: APComplex) -> dict:
    """Summand of every cell, by dimension."""
    return {dim: [(c.name, c.orbit, c.sign, c.summand) for c in cx.cells(d)]
            for dim, d in (("faces", 2), ("edges", 1), ("vertices", 0))}


def complex_from_spec(spec) -> APComplex:
    """An :class:`APComplex` from a combinatorial fixture."""
    N = spec.group_order
    cells = {k: [Cell(n, o, s) for n, o, s in getattr(spec, k)] for k in ("faces", "edges", "vertices")}
    bd = {1: [[reduce_entry(e, cells["vertices"][i]) for e in r] for i, r in enumerate(spec.boundary[1])],
          2: [[reduce_entry(e, cells["edges"][i]) for e in r] for i, r in enumerate(spec.boundary[2])]}
    sb = {}
    for k, M in spec.substitution.items():
        cs = cells[{0: "vertices", 1: "edges", 2: "faces"}[k]]
        sb[k] = [[reduce_entry(e, cs[i]) for e in r] for i, r in enumerate(M)]
    notes = {"source": "combinatorial"}
    if 0 not in sb and 1 in sb:
        sb[0] = _derive_phi0(cells["vertices"], cells["edges"], bd[1], sb[1], N)
        notes["phi0"] = "derived: the unique vertex map making the substitution a chain map"
    return APComplex(spec.name, "x", N, cells["faces"], cells["edges"], cells["vertices"], bd, sb,
                     [c.name for c in cells["faces"]], notes)


def _derive_phi0(verts, edges, d1, p1, N):
    """Columns ``t^s * w`` (vertices go to vertices) with ``d1 phi1 = phi0 d1``."""
    from itertools import product
    choices = [(w, s) for w, c in enumerate(verts) for s in range(c.orbit)]
    n = len(verts)
    lhs = None
    found = []
    for cols in product(choices, repeat=n):
        p0 = [[GroupRingElement.zero(N) for _ in range(n)] for _ in range(n)]
        for v, (w, s) in enumerate(cols):
            p0[w][v] = reduce_entry(GroupRingElement.monomial(N, s), verts[w])
        if lhs is None:
            lhs = matmul(expand(d1, verts, edges), expand(p1, edges, edges))
        if lhs == matmul(expand(p0, verts, verts), expand(d1, verts, edges)):
            found.append(p0)
    if len(found) != 1:
        raise ComplexError(f"vertex substitution not determined ({len(found)} candidates)")
    return found[0]


def quotient_complex(cx: APComplex) -> APComplex:
    """``t -> 1`` image of a ``Sigma_x`` complex (valid when every orbit has sign +1)."""
    if any(c.sign != 1 for d in (0, 1, 2) for c in cx.cells(d)):
        raise ComplexError("t -> 1 is not a cell-wise quotient when an edge reverses under rotation")

    def m(M):
        return [[GroupRingElement([e.augmentation()]) for e in r] for r in M]

    strip = lambda cs: [Cell(c.name, 1, 1) for c in cs]
    return APComplex(cx.system, "0", 1, strip(cx.faces), strip(cx.edges), strip(cx.vertices),
                     {k: m(v) for k, v in cx.boundary.items()}, {k: m(v) for k, v in cx.subst.items()},
                     list(cx.face_types), {"source": "t -> 1 of Sigma_x"})
