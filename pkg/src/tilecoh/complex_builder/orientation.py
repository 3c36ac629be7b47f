"""The relative orientation group of a substitution tiling system.

Every tile of type ``S`` in a tiling generated by the system sits at an
absolute rotation ``a_S * g`` with ``a_S`` a fixed base rotation and ``g``
in the group ``G`` generated by the loop rotations of the placement graph.
``a_S`` is fixed by a breadth-first walk from the first type; each placement
``T -> S`` with rotation ``rho`` then yields the generator
``a_S^{-1} a_T rho``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..exact_algebra.perron import is_root_of_unity
from ..tiling_model.geometry import Vec


@dataclass
class OrientationGroup:
    kind: str  # "finite" | "infinite"
    order: int | None
    generators: list  # unit Vec, nontrivial and distinct
    base: dict  # type -> unit Vec (a_S)
    zeta: Vec | None = None  # rotation by 2 pi / order
    generator_orders: list = field(default_factory=list)  # None for non-roots of unity
    _table: dict = field(default_factory=dict, repr=False)

    @property
    def finite(self) -> bool:
        return self.kind == "finite"

    def index(self, rot: Vec) -> int:
        """``k`` with ``rot = zeta^k`` (exact lookup)."""
        try:
            return self._table[rot.key()]
        except KeyError:
            raise ValueError(f"rotation {rot.approx()} is not in the orientation group") from None

    def relative_index(self, tile_type: str, rot: Vec) -> int:
        """Orientation index of a tile of ``tile_type`` whose absolute rotation is ``rot``."""
        return self.index(self.base[tile_type].conj().cmul(rot))

    def to_json(self) -> dict:
        return {"kind": self.kind, "order": self.order,
                "generators": [[float(g.x), float(g.y)] for g in self.generators],
                "generator_orders": self.generator_orders,
                "generator_angles_deg": [math.degrees(math.atan2(float(g.y), float(g.x))) for g in self.generators]}


def _pow(z: Vec, k: int) -> Vec:
    K = z.x.field
    out = Vec(K.one, K.zero)
    base = z if k >= 0 else z.conj()
    for _ in range(abs(k)):
        out = out.cmul(base)
    return out


def orientation_group(sys) -> OrientationGroup:
    K = sys.field
    one = Vec(K.one, K.zero)
    types = sys.types
    base = {types[0]: one}
    queue = [types[0]]
    gens = {}
    while queue:
        t = queue.pop(0)
        for pl in sys.rule.placements[t]:
            rot = base[t].cmul(pl.motion.rot)
            if pl.child not in base:
                base[pl.child] = rot
                queue.append(pl.child)
    # second pass once every base rotation is fixed
    for t in types:
        if t not in base:
            raise ValueError(f"tile type {t} never occurs in a supertile of {types[0]}")
    for t in types:
        for pl in sys.rule.placements[t]:
            g = base[pl.child].conj().cmul(base[t].cmul(pl.motion.rot))
            if g != one:
                gens.setdefault(g.key(), g)
    gens = [gens[k] for k in sorted(gens)]
    orders = [is_root_of_unity(g.x, g.y) for g in gens]
    if any(o is None for o in orders):
        return OrientationGroup("infinite", None, gens, base, generator_orders=orders)
    N = 1
    for o in orders:
        N = N * o // math.gcd(N, o)
    # exponents m_i with g_i = zeta^{m_i}, read off the float angles and checked exactly below
    ms = [round(math.atan2(float(g.y), float(g.x)) * N / (2 * math.pi)) % N for g in gens]
    # Bezout: sum c_i m_i = gcd(N, m_1, ...) which must be 1
    cur_g, coef = N, [0] * len(gens)
    for i, m in enumerate(ms):
        cur_g, x, y = _egcd(cur_g, m)
        coef = [c * x for c in coef]
        coef[i] += y
    if cur_g != 1 and N > 1:
        raise AssertionError("orientation generators do not generate Z_N")
    zeta = one
    for g, c in zip(gens, coef):
        zeta = zeta.cmul(_pow(g, c % N))
    table = {}
    z = one
    for k in range(N):
        table[z.key()] = k
        z = z.cmul(zeta)
    if z != one or len(table) != N or any(table.get(g.key()) != m for g, m in zip(gens, ms)):
        raise AssertionError("rotation angles disagree with their exact powers")
    return OrientationGroup("finite", N, gens, base, zeta, orders, table)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y
