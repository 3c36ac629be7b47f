"""Prototiles, substitution rules and the conditions a substitution tiling system must satisfy."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..exact_algebra.numbers import FieldElement, NumberField
from ..exact_algebra.perron import is_primitive
from .geometry import (Motion, Vec, bbox, motion_taking, on_closed_segment, on_open_segment,
                       segment_param, signed_area2)


class TilingSystemError(ValueError):
    """Raised when a tiling system violates one of its structural conditions."""


@dataclass(frozen=True)
class ProtoTile:
    id: str
    vertices: tuple  # of Vec, counterclockwise
    edge_labels: tuple

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise TilingSystemError(f"prototile {self.id} needs at least 3 vertices")
        if len(self.edge_labels) != len(self.vertices):
            raise TilingSystemError(f"prototile {self.id}: one label per edge required")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, j: int) -> tuple[Vec, Vec]:
        return self.vertices[j], self.vertices[(j + 1) % self.n]

    def area(self) -> FieldElement:
        return signed_area2(self.vertices) / 2

    def placed(self, m: Motion) -> list[Vec]:
        return [m.apply(v) for v in self.vertices]

    def __eq__(self, other) -> bool:
        return (isinstance(other, ProtoTile) and self.id == other.id
                and [v.key() for v in self.vertices] == [v.key() for v in other.vertices]
                and self.edge_labels == other.edge_labels)

    def __hash__(self) -> int:
        return hash((self.id, tuple(v.key() for v in self.vertices)))


@dataclass(frozen=True)
class Placement:
    child: str
    motion: Motion


@dataclass
class SubstitutionRule:
    linear_factor: FieldElement
    placements: dict  # tile id -> tuple[Placement]


@dataclass
class TilingSystem:
    name: str
    field: NumberField
    prototiles: dict  # id -> ProtoTile, in declaration order
    rule: SubstitutionRule
    mode: str = "geometric"
    notes: str = ""

    @property
    def types(self) -> list[str]:
        return list(self.prototiles)

    @property
    def c(self) -> FieldElement:
        return self.rule.linear_factor

    def tile(self, tid: str) -> ProtoTile:
        return self.prototiles[tid]

    def count_matrix(self) -> list[list[int]]:
        """``M[i][j]`` = number of type-``i`` tiles in ``phi(T_j)`` (columns are parents)."""
        idx = {t: i for i, t in enumerate(self.types)}
        n = len(idx)
        M = [[0] * n for _ in range(n)]
        for t, pls in self.rule.placements.items():
            for p in pls:
                M[idx[p.child]][idx[t]] += 1
        return M

    def identity(self) -> Motion:
        return Motion.identity(self.field)


# --------------------------------------------------------------------------
# patches

@dataclass
class PlacedTile:
    type: str
    motion: Motion
    vertices: list = field(default=None, repr=False)


class Patch:
    """A finite set of placed tiles with exact vertex coordinates."""

    def __init__(self, sys: TilingSystem, tiles: Sequence[tuple[str, Motion]]):
        self.sys = sys
        self.tiles = [PlacedTile(t, m, sys.tile(t).placed(m)) for t, m in tiles]
        self._vertex_index = None
        self._edge_index = None

    def __len__(self) -> int:
        return len(self.tiles)

    def substitute(self) -> "Patch":
        c = self.sys.c
        out = []
        for pt in self.tiles:
            big = pt.motion.scaled(c)
            for pl in self.sys.rule.placements[pt.type]:
                out.append((pl.child, big.compose(pl.motion)))
        return Patch(self.sys, out)

    def area(self) -> FieldElement:
        acc = self.sys.field.zero
        for pt in self.tiles:
            acc = acc + self.sys.tile(pt.type).area()
        return acc

    def vertex_index(self) -> dict:
        """point key -> list of (tile index, vertex index)."""
        if self._vertex_index is None:
            idx = {}
            for i, pt in enumerate(self.tiles):
                for j, v in enumerate(pt.vertices):
                    idx.setdefault(v.key(), []).append((i, j))
            self._vertex_index = idx
        return self._vertex_index

    def edge_index(self) -> dict:
        """(start key, end key) -> list of (tile index, edge index)."""
        if self._edge_index is None:
            idx = {}
            for i, pt in enumerate(self.tiles):
                vs = pt.vertices
                n = len(vs)
                for j in range(n):
                    idx.setdefault((vs[j].key(), vs[(j + 1) % n].key()), []).append((i, j))
            self._edge_index = idx
        return self._edge_index

    def unmatched_edges(self) -> list[tuple[int, int]]:
        eidx = self.edge_index()
        out = []
        for (a, b), occ in eidx.items():
            if (b, a) not in eidx:
                out.extend(occ)
        return sorted(out)

    def duplicate_edges(self) -> list:
        eidx = self.edge_index()
        dup = [occ for occ in eidx.values() if len(occ) > 1]
        dup += [eidx[(a, b)] + eidx[(b, a)] for (a, b) in eidx
                if (b, a) in eidx and len(eidx[(b, a)]) > 1]
        return dup

    def closed_vertices(self) -> set:
        """Keys of vertices surrounded by a closed fan of tiles (every incident edge shared)."""
        eidx = self.edge_index()
        bad = set()
        for (a, b) in eidx:
            if (b, a) not in eidx:
                bad.add(a)
                bad.add(b)
        return {k for k in self.vertex_index() if k not in bad}

    def interior_tiles(self) -> list[int]:
        closed = self.closed_vertices()
        return [i for i, pt in enumerate(self.tiles) if all(v.key() in closed for v in pt.vertices)]

    def neighbours(self, i: int) -> list[int]:
        vidx = self.vertex_index()
        out = set()
        for v in self.tiles[i].vertices:
            for k, _ in vidx[v.key()]:
                if k != i:
                    out.add(k)
        return sorted(out)

    def t_junctions(self) -> list[tuple[int, int, int, int]]:
        """(tile, edge, other tile, vertex) with the vertex strictly inside the edge."""
        pts = {}
        for i, pt in enumerate(self.tiles):
            for j, v in enumerate(pt.vertices):
                pts.setdefault(v.key(), (v, i, j))
        approx = [(v.approx(), v, i, j) for v, i, j in pts.values()]
        out = []
        for i, pt in enumerate(self.tiles):
            vs = pt.vertices
            n = len(vs)
            for j in range(n):
                a, b = vs[j], vs[(j + 1) % n]
                x0, y0, x1, y1 = bbox((a, b))
                eps = 1e-9 * (1 + abs(x1) + abs(y1) + abs(x0) + abs(y0))
                for (px, py), v, k, l in approx:
                    if x0 - eps <= px <= x1 + eps and y0 - eps <= py <= y1 + eps:
                        if on_open_segment(v, a, b):
                            out.append((i, j, k, l))
        return out

    def polygons(self) -> list[list[Vec]]:
        return [pt.vertices for pt in self.tiles]


def supertile(sys: TilingSystem, T: str, n: int) -> Patch:
    """The level-``n`` supertile ``phi^n T`` in the frame of ``c^n T``."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    p = Patch(sys, [(T, sys.identity())])
    for _ in range(n):
        p = p.substitute()
    return p


def area_vector(sys: TilingSystem) -> list[FieldElement]:
    return [sys.tile(t).area() for t in sys.types]


# --------------------------------------------------------------------------
# validation

@dataclass
class ConditionResult:
    condition: int
    passed: bool
    detail: str
    data: dict = field(default_factory=dict)


@dataclass
class ValidationReport:
    system: str
    conditions: list

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def result(self, k: int) -> ConditionResult:
        return next(c for c in self.conditions if c.condition == k)

    def to_json(self) -> dict:
        return {"system": self.system, "ok": self.ok,
                "conditions": [{"condition": c.condition, "passed": c.passed, "detail": c.detail,
                                "data": c.data} for c in self.conditions]}


def rotational_symmetries(tile: ProtoTile) -> list[Motion]:
    """Nontrivial rotations mapping the labelled polygon onto itself."""
    vs = tile.vertices
    n = len(vs)
    out = []
    for s in range(1, n):
        if any(tile.edge_labels[(j + s) % n] != tile.edge_labels[j] for j in range(n)):
            continue
        m = motion_taking(vs, [vs[(j + s) % n] for j in range(n)])
        if m is not None:
            out.append(m)
    return out


def check_decomposition(sys: TilingSystem, T: str) -> list[str]:
    """Problems with ``phi(T)`` as an edge-to-edge dissection of ``c T`` (empty if none)."""
    proto = sys.tile(T)
    patch = supertile(sys, T, 1)
    problems = []
    if patch.area() != proto.area() * sys.c * sys.c:
        problems.append(f"{T}: children's area differs from c^2 * area")
    for occ in patch.duplicate_edges():
        problems.append(f"{T}: overlapping children along edges {occ}")
    for i, j, k, l in patch.t_junctions():
        problems.append(f"{T}: child {i} edge {j} meets child {k} vertex {l} mid-edge")
    outline = [v.scale(sys.c) for v in proto.vertices]
    problems += _boundary_chain_problems(patch, outline, T)
    return problems


def _boundary_chain_problems(patch: Patch, outline: list[Vec], T: str) -> list[str]:
    problems = []
    free = patch.unmatched_edges()
    n = len(outline)
    pieces = {j: [] for j in range(n)}
    for i, j in free:
        a, b = patch.tiles[i].vertices[j], patch.tiles[i].vertices[(j + 1) % len(patch.tiles[i].vertices)]
        for e in range(n):
            p, q = outline[e], outline[(e + 1) % n]
            if on_closed_segment(a, p, q) and on_closed_segment(b, p, q) and (b - a).dot(q - p).sign() > 0:
                pieces[e].append((segment_param(a, p, q), segment_param(b, p, q)))
                break
        else:
            problems.append(f"{T}: child {i} edge {j} is unmatched inside c*{T}")
    for e, segs in pieces.items():
        segs.sort(key=lambda s: s[0])
        pos = 0
        for s, t in segs:
            if s != pos:
                problems.append(f"{T}: boundary edge {e} of c*{T} not covered exactly")
                break
            pos = t
        else:
            if pos != 1:
                problems.append(f"{T}: boundary edge {e} of c*{T} not covered exactly")
    return problems


def validate_system(sys: TilingSystem, n_max: int = 6, edge_levels: int = 2) -> ValidationReport:
    """Check conditions (1)-(5); condition (4) searches ``phi^n T`` for ``n <= n_max``."""
    conds = []
    conds.append(ConditionResult(1, True, "substitution is stored in prototile frames (equivariant by construction)"))

    # (2) dissection of c T, full edge to full edge at levels 1..edge_levels
    problems = []
    c = sys.c
    if c.sign() <= 0 or (c - 1).sign() <= 0:
        problems.append("linear factor must exceed 1")
    for t in sys.types:
        for pl in sys.rule.placements[t]:
            if pl.motion.reflect:
                problems.append(f"{t}: placement of {pl.child} uses a reflection")
            if not pl.motion.is_unit():
                problems.append(f"{t}: placement of {pl.child} is not a rigid motion")
    if not problems:
        for t in sys.types:
            problems += check_decomposition(sys, t)
    if not problems:
        for t in sys.types:
            for lvl in range(2, edge_levels + 1):
                p = supertile(sys, t, lvl)
                for i, j, k, l in p.t_junctions():
                    problems.append(f"phi^{lvl}({t}): tile {i} ({p.tiles[i].type}) edge {j} meets tile {k} "
                                    f"({p.tiles[k].type}) vertex {l} mid-edge")
                    break
    conds.append(ConditionResult(2, not problems, "; ".join(problems[:5]) or "edge-to-edge dissections",
                                 {"problems": problems[:20]}))

    # (3) every type eventually appears in every supertile
    M = sys.count_matrix()
    literal = all(all(row[j] > 0 for row in M) for j in range(len(M)))
    prim = is_primitive(M)
    k_all = None
    if prim:
        A = np.array(M, dtype=object)
        P = A.copy()
        for k in range(1, (len(M) - 1) ** 2 + 2):
            if (P > 0).all():
                k_all = k
                break
            P = P.dot(A)
    conds.append(ConditionResult(3, prim, "phi^k T contains every type" if prim else "count matrix not primitive",
                                 {"level_1_literal": literal, "k": k_all}))

    # (4) a parallel copy of T inside phi^n T
    witness = {}
    for t in sys.types:
        witness[t] = "unverified at bound"
        level = [(t, sys.identity())]
        for n in range(1, n_max + 1):
            nxt = []
            for tt, m in level:
                big = m.scaled(c)
                for pl in sys.rule.placements[tt]:
                    nxt.append((pl.child, big.compose(pl.motion)))
            level = nxt
            if any(tt == t and m.rot == sys.identity().rot for tt, m in level):
                witness[t] = n
                break
            if len(level) > 200000:
                break
    ok4 = all(isinstance(v, int) for v in witness.values())
    conds.append(ConditionResult(4, ok4, "parallel copies found" if ok4 else "unverified at bound",
                                 {"n_T": witness}))

    # (5) no rotational symmetry
    sym = {}
    for t in sys.types:
        rs = rotational_symmetries(sys.tile(t))
        if rs:
            sym[t] = [(float(m.rot.x), float(m.rot.y)) for m in rs]
    conds.append(ConditionResult(5, not sym, "no symmetric prototiles" if not sym
                                 else f"symmetric prototiles: {sorted(sym)}", {"symmetries": sym}))
    return ValidationReport(sys.name, conds)


# --------------------------------------------------------------------------
# edge splitting

def split_edges(sys: TilingSystem, levels: int = 2, max_vertices: int = 64) -> TilingSystem:
    """Insert vertices on prototile edges until every supertile up to ``levels`` is edge-to-edge."""
    cur = sys
    while True:
        added = {}
        for t in cur.types:
            for lvl in range(1, levels + 1):
                p = supertile(cur, t, lvl)
                for i, j, k, l in p.t_junctions():
                    pt = p.tiles[i]
                    q = pt.motion.inverse().apply(p.tiles[k].vertices[l])
                    added.setdefault(pt.type, {}).setdefault(j, {})[q.key()] = q
        if not added:
            return cur
        protos = {}
        for t, proto in cur.prototiles.items():
            if t not in added:
                protos[t] = proto
                continue
            vs, labels = [], []
            for j in range(proto.n):
                a, b = proto.edge(j)
                vs.append(a)
                labels.append(proto.edge_labels[j])
                extra = sorted(added[t].get(j, {}).values(), key=lambda q: segment_param(q, a, b))
                for q in extra:
                    vs.append(q)
                    labels.append(proto.edge_labels[j])
            if len(vs) > max_vertices:
                raise TilingSystemError(f"edge refinement of {t} did not stabilize within {max_vertices} vertices")
            protos[t] = ProtoTile(t, tuple(vs), tuple(labels))
        cur = TilingSystem(cur.name, cur.field, protos, cur.rule, cur.mode, cur.notes)
