"""First coronas, collared systems and border forcing.

A corona is a tile together with every tile touching it, stored in the frame
of the central tile (the centre sits at the identity), which makes it
canonical up to rotation and translation.

Coronas are enumerated by closure: the corona of a child ``x`` of a tile
``p`` lies inside the substituted corona of ``p`` (any tile touching ``x``
comes from a parent touching ``p``), so starting from the coronas of
interior tiles of small supertiles and repeatedly substituting gives every
corona reachable from them.  The supertile-scanning harvest is kept as a
cross-check (``method="harvest"``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..tiling_model.geometry import Motion, Vec
from ..tiling_model.system import Patch, Placement, ProtoTile, SubstitutionRule, TilingSystem, supertile


class CoronaError(RuntimeError):
    """Corona enumeration did not stabilize, or an induced corona was ambiguous."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Corona:
    center: str
    tiles: tuple  # ((type, Motion), ...), centre first at the identity

    @property
    def key(self) -> tuple:
        return corona_key(self.tiles)

    def patch(self, sys) -> Patch:
        return Patch(sys, list(self.tiles))


def corona_key(tiles) -> tuple:
    c = tiles[0]
    return (c[0], tuple(sorted((t, m.key()) for t, m in tiles[1:])))


def _corona_of(patch: Patch, i: int) -> tuple:
    """Tiles touching tile ``i`` of ``patch``, moved into the frame of tile ``i``."""
    inv = patch.tiles[i].motion.inverse()
    out = [(patch.tiles[i].type, inv.compose(patch.tiles[i].motion))]
    for k in patch.neighbours(i):
        pt = patch.tiles[k]
        out.append((pt.type, inv.compose(pt.motion)))
    head, rest = out[0], sorted(out[1:], key=lambda tm: (tm[0], tm[1].key()))
    return (head, *rest)


@dataclass
class CoronaSet:
    """Coronas by centre type, each list in canonical order."""

    system: str
    by_type: dict  # type -> list[Corona]
    method: str
    levels: dict = field(default_factory=dict)  # diagnostics
    heuristic: bool = False

    def all(self) -> list:
        return [c for t in self.by_type for c in self.by_type[t]]

    def count(self) -> int:
        return sum(len(v) for v in self.by_type.values())

    def index(self) -> dict:
        return {c.key: (t, i) for t, cs in self.by_type.items() for i, c in enumerate(cs)}


def _sorted_coronas(found: dict, types) -> dict:
    by_type = {t: [] for t in types}
    for key in sorted(found, key=repr):
        by_type[key[0]].append(found[key])
    return by_type


def _seed(sys: TilingSystem, max_level: int = 8) -> dict:
    found = {}
    for t in sys.types:
        for n in range(1, max_level + 1):
            p = supertile(sys, t, n)
            inner = p.interior_tiles()
            for i in inner:
                tiles = _corona_of(p, i)
                found.setdefault(corona_key(tiles), Corona(tiles[0][0], tiles))
            if inner:
                break
        else:
            raise CoronaError(f"no interior tile in supertiles of {t} up to level {max_level}")
    return found


def children_coronas(sys: TilingSystem, corona: Corona) -> list:
    """Coronas of the children of the centre, read inside the substituted corona."""
    p = corona.patch(sys).substitute()
    nkids = len(sys.rule.placements[corona.center])
    return [_corona_of(p, i) for i in range(nkids)]


def enumerate_coronas(sys: TilingSystem, method: str = "closure", max_coronas: int = 20000,
                      n_budget: int = 8) -> CoronaSet:
    """All first coronas up to rotation and translation, grouped by centre type."""
    if method == "harvest":
        return _harvest(sys, n_budget)
    found = _seed(sys)
    todo = list(found)
    while todo:
        key = todo.pop()
        for tiles in children_coronas(sys, found[key]):
            k = corona_key(tiles)
            if k not in found:
                found[k] = Corona(tiles[0][0], tiles)
                todo.append(k)
                if len(found) > max_coronas:
                    raise CoronaError(f"more than {max_coronas} coronas", _sorted_coronas(found, sys.types))
    return CoronaSet(sys.name, _sorted_coronas(found, sys.types), "closure")


def _harvest(sys: TilingSystem, n_budget: int) -> CoronaSet:
    """Scan interiors of ``phi^n T`` until the corona set is unchanged for two consecutive levels."""
    found, history = {}, {}
    stable = 0
    for n in range(1, n_budget + 1):
        before = len(found)
        for t in sys.types:
            p = supertile(sys, t, n)
            for i in p.interior_tiles():
                tiles = _corona_of(p, i)
                found.setdefault(corona_key(tiles), Corona(tiles[0][0], tiles))
        history[n] = len(found)
        stable = stable + 1 if len(found) == before and before else 0
        if stable >= 2:
            return CoronaSet(sys.name, _sorted_coronas(found, sys.types), "harvest", history, heuristic=True)
    raise CoronaError(f"corona set not stable within n <= {n_budget}", _sorted_coronas(found, sys.types))


# --------------------------------------------------------------------------
# counting conventions

def reflection_symmetry(tile: ProtoTile) -> Motion | None:
    """An orientation-reversing motion mapping the labelled polygon onto itself, if any."""
    vs = tile.vertices
    n = len(vs)
    for s in range(n):
        # v_j -> v_{s-j}; edge j maps onto edge s-j-1 traversed backwards
        if any(tile.edge_labels[j] != tile.edge_labels[(s - j - 1) % n] for j in range(n)):
            continue
        d0 = (vs[1] - vs[0]).conj()
        d1 = vs[(s - 1) % n] - vs[s % n]
        nn = d0.norm2()
        if d1.norm2() != nn:
            continue
        r = d1.cmul(d0.conj())
        rot = Vec(r.x / nn, r.y / nn)
        m = Motion(rot, vs[s % n] - rot.cmul(vs[0].conj()), True)
        if all(m.apply(vs[j]) == vs[(s - j) % n] for j in range(n)):
            return m
    return None


def count_up_to_reflection(sys: TilingSystem, cs: CoronaSet) -> int | None:
    """Number of coronas when mirror images are also identified (needs mirror-symmetric tiles)."""
    sigma = {t: reflection_symmetry(sys.tile(t)) for t in sys.types}
    if any(v is None for v in sigma.values()):
        return None
    seen, orbits = set(), 0
    for c in cs.all():
        if c.key in seen:
            continue
        orbits += 1
        seen.add(c.key)
        R = sigma[c.center]
        tiles = [(c.center, Motion.identity(sys.field))]
        tiles += [(t, R.compose(m).compose(sigma[t])) for t, m in c.tiles[1:]]
        seen.add(corona_key(tiles))
    return orbits


def corona_counts(sys: TilingSystem, cs: CoronaSet, orientation=None) -> dict:
    """Counts under the three conventions (per orientation only for a finite group)."""
    n = cs.count()
    out = {"up_to_rotation": n, "by_type": {t: len(v) for t, v in cs.by_type.items()},
           "up_to_rotation_and_reflection": count_up_to_reflection(sys, cs)}
    if orientation is not None and orientation.finite:
        out["per_orientation"] = n * orientation.order
    else:
        out["per_orientation"] = None
    return out


# --------------------------------------------------------------------------
# collaring

@dataclass
class CollaredSystem:
    base: TilingSystem
    system: TilingSystem  # types "T.i"
    base_type: dict  # collared id -> base id
    coronas: CoronaSet  # of the base system; corona i of T is type "T.i"

    @property
    def types(self) -> list:
        return self.system.types


def collar(sys: TilingSystem, coronas: CoronaSet | None = None) -> CollaredSystem:
    cs = coronas or enumerate_coronas(sys)
    index = cs.index()
    name = {key: f"{t}.{i}" for key, (t, i) in index.items()}
    protos, placements, base_type = {}, {}, {}
    for t, lst in cs.by_type.items():
        proto = sys.tile(t)
        for i, c in enumerate(lst):
            cid = f"{t}.{i}"
            base_type[cid] = t
            protos[cid] = ProtoTile(cid, proto.vertices, proto.edge_labels)
            kids = children_coronas(sys, c)
            out = []
            for pl, tiles in zip(sys.rule.placements[t], kids):
                k = corona_key(tiles)
                if k not in name:
                    raise CoronaError(f"child corona of {cid} not in the corona set")
                out.append(Placement(name[k], pl.motion))
            placements[cid] = tuple(out)
    # drop collared types that no supertile of another collared type produces (cannot happen
    # for a closed corona set, but keep the system honest)
    rule = SubstitutionRule(sys.c, placements)
    csys = TilingSystem(f"{sys.name}_collared", sys.field, protos, rule, sys.mode,
                        f"collared from {sys.name}: one type per first corona")
    return CollaredSystem(sys, csys, base_type, cs)


def _members(patch: Patch, i: int) -> list:
    """``(tile index, motion in the frame of tile i)`` for tile ``i`` and its neighbours, centre first."""
    inv = patch.tiles[i].motion.inverse()
    return [(k, inv.compose(patch.tiles[k].motion)) for k in [i, *patch.neighbours(i)]]


def collared_coronas(col: CollaredSystem, max_coronas: int = 200000) -> CoronaSet:
    """First coronas of the collared system.

    A collared corona has the geometry of a base corona, so the substituted
    geometry is computed once per base corona and only the labels are
    propagated.  A single seed suffices: the closure of one corona contains
    the coronas of every tile of every supertile of its centre, hence (by
    primitivity) every corona.
    """
    base, csys, bt = col.base, col.system, col.base_type
    geom = {}

    def children(tiles):
        # base-canonical order, so cached tile indices mean the same thing for every labelling
        tiles = (tiles[0], *sorted(tiles[1:], key=lambda tm: (bt[tm[0]], tm[1].key())))
        plain = tuple((bt[t], m) for t, m in tiles)
        key = corona_key(plain)
        if key not in geom:
            p = Patch(base, list(plain)).substitute()
            nk = len(base.rule.placements[plain[0][0]])
            geom[key] = [_members(p, i) for i in range(nk)]
        # label the substituted tiles: child b of tile a has the type placed by a's collared type
        labels = [pl.child for t, _ in tiles for pl in csys.rule.placements[t]]
        out = []
        for members in geom[key]:
            head, *rest = [(labels[k], m) for k, m in members]
            rest.sort(key=lambda tm: (tm[0], tm[1].key()))
            out.append((head, *rest))
        return out

    t0 = csys.types[0]
    for n in range(1, 9):
        p = supertile(csys, t0, n)
        inner = p.interior_tiles()
        if inner:
            break
    else:
        raise CoronaError(f"no interior tile in supertiles of {t0}")
    seed = _corona_of(p, inner[0])
    found = {corona_key(seed): Corona(seed[0][0], seed)}
    todo = list(found)
    while todo:
        key = todo.pop()
        for tiles in children(found[key].tiles):
            k = corona_key(tiles)
            if k not in found:
                found[k] = Corona(tiles[0][0], tiles)
                todo.append(k)
                if len(found) > max_coronas:
                    raise CoronaError(f"more than {max_coronas} coronas", _sorted_coronas(found, csys.types))
    return CoronaSet(csys.name, _sorted_coronas(found, csys.types), "closure-collared",
                     {"base_geometries": len(geom)})


# --------------------------------------------------------------------------
# border forcing

@dataclass
class ForcingResult:
    forced: bool
    level: int | None
    n_max: int
    detail: str

    def to_json(self) -> dict:
        return {"forced": self.forced, "level": self.level, "n_max": self.n_max, "detail": self.detail}


def forces_border(sys: TilingSystem, n_max: int = 4, coronas: CoronaSet | None = None,
                  base_type: dict | None = None) -> ForcingResult:
    """Smallest ``N <= n_max`` such that each type ``T`` determines the tiles abutting ``phi^N T``.

    Abutting tiles are compared by base type (``base_type`` maps collared ids to
    their underlying tiles), so a collared system forces its border at ``N = 1``.
    """
    cs = coronas or enumerate_coronas(sys)
    bt = base_type or {t: t for t in sys.types}
    for N in range(1, n_max + 1):
        ok = True
        for t, lst in cs.by_type.items():
            patterns = set()
            for c in lst:
                patterns.add(_border_pattern(sys, c, N, bt))
                if len(patterns) > 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return ForcingResult(True, N, n_max, f"phi^{N} T determines its border for every T")
    return ForcingResult(False, None, n_max, f"undetermined at N_max = {n_max}")


def _border_pattern(sys: TilingSystem, c: Corona, N: int, bt: dict) -> frozenset:
    p = Patch(sys, list(c.tiles))
    for _ in range(N):
        p = p.substitute()
    # children of the centre come first after each substitution
    ncenter = len(supertile(sys, c.center, N))
    inner = {v.key() for pt in p.tiles[:ncenter] for v in pt.vertices}
    out = set()
    for pt in p.tiles[ncenter:]:
        if any(v.key() in inner for v in pt.vertices):
            out.add((bt[pt.type], pt.motion.key()))
    return frozenset(out)
