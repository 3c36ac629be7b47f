"""Constructions of the built-in tiling systems from their defining geometry.

The shipped ``.tsys.json`` fixtures are written by ``tools/make_fixtures.py``
from these functions; the tests rebuild them and compare.

Conventions pinned here (the complex builder's gauge search relies on none
of them, but they make the output readable):

* Penrose: Robinson triangles with unit legs.  ``acute``/``obtuse`` have
  the apex-to-B leg labelled ``e1`` and the apex-to-C leg ``e2``; bases are
  ``e3`` (acute) and ``e4`` (obtuse).  ``*_m`` are the mirror images.
* Pinwheel: vertices are named R (right angle), L (end of the long leg),
  S (end of the short leg); the ``_m`` tile is the mirror image.
"""
from __future__ import annotations

from ..exact_algebra.group_ring import GroupRingElement
from ..exact_algebra.numbers import NumberField, rational_field
from ..tiling_model.geometry import Motion, Vec, orient
from ..tiling_model.system import Placement, ProtoTile, SubstitutionRule, TilingSystem
from .io import CombinatorialComplexSpec


def _motion_from_frame(ref: tuple, dst: tuple) -> Motion:
    """Rotation + translation taking ``ref[0], ref[1]`` onto ``dst[0], dst[1]`` (same lengths)."""
    d0 = ref[1] - ref[0]
    d1 = dst[1] - dst[0]
    n = d0.norm2()
    r = d1.cmul(d0.conj())
    rot = Vec(r.x / n, r.y / n)
    m = Motion(rot, dst[0] - rot.cmul(ref[0]))
    for p, q in zip(ref, dst):
        assert m.apply(p) == q, "reference frame does not match placement"
    return m


# --------------------------------------------------------------------------

def chair() -> TilingSystem:
    Q = rational_field()
    pts = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
    L = ProtoTile("L", tuple(Vec.of(Q, x, y) for x, y in pts), ("a",) * 6)

    def m(cs, sn, tx, ty):
        return Motion(Vec.of(Q, cs, sn), Vec.of(Q, tx, ty))

    pls = (
        Placement("L", m(1, 0, 0, 0)),
        Placement("L", m(1, 0, 1, 1)),
        Placement("L", m(0, 1, 4, 0)),
        Placement("L", m(0, -1, 0, 4)),
    )
    return TilingSystem("chair", Q, {"L": L}, SubstitutionRule(Q(2), {"L": pls}),
                        notes="L-shaped tromino, inflation 2, four children")


def square(labels=("a", "b", "c", "d")) -> TilingSystem:
    """Unit square under the 2x2 dilation; distinct edge labels break its symmetry."""
    Q = rational_field()
    S = ProtoTile("S", tuple(Vec.of(Q, x, y) for x, y in [(0, 0), (1, 0), (1, 1), (0, 1)]), tuple(labels))
    pls = tuple(Placement("S", Motion.translation(Vec.of(Q, x, y))) for x, y in [(0, 0), (1, 0), (0, 1), (1, 1)])
    return TilingSystem("square", Q, {"S": S}, SubstitutionRule(Q(2), {"S": pls}),
                        notes="periodic test system: unit square, inflation 2")


# --------------------------------------------------------------------------

def penrose_field() -> NumberField:
    # theta = 4 sin(pi/5)
    return NumberField([1, 0, -20, 0, 80], ("47/20", "59/25"), name="Q(4 sin 36deg)")


def penrose_triangles() -> TilingSystem:
    K = penrose_field()
    th = K.gen
    r5 = (10 - th * th) / 2
    tau = (1 + r5) / 2
    zero = Vec(K.zero, K.zero)
    e = Vec(K.one, K.zero)
    d36 = Vec(tau / 2, th / 4)
    d108 = Vec((1 - r5) / 4, th * tau / 4)

    # (colour, apex, B, C) reference triples, legs apex-B and apex-C of unit length
    ref = {
        "acute": ("red", zero, e, d36),
        "acute_m": ("red", zero, e, d36.conj()),
        "obtuse": ("blue", zero, e, d108),
        "obtuse_m": ("blue", zero, e, d108.conj()),
    }

    def classify(colour, a, b, c):
        hand = orient(a, b, c) > 0
        return {("red", True): "acute", ("red", False): "acute_m",
                ("blue", True): "obtuse", ("blue", False): "obtuse_m"}[(colour, hand)]

    protos = {}
    for tid, (colour, a, b, c) in ref.items():
        base = "e3" if colour == "red" else "e4"
        if orient(a, b, c) > 0:
            vs, labels = (a, b, c), ("e1", base, "e2")
        else:
            vs, labels = (a, c, b), ("e2", base, "e1")
        protos[tid] = ProtoTile(tid, vs, labels)

    placements = {}
    for tid, (colour, a, b, c) in ref.items():
        A, B, C = a.scale(tau), b.scale(tau), c.scale(tau)
        if colour == "red":
            P = A + (B - A).scale(1 / tau)
            kids = [("red", C, P, B), ("blue", P, C, A)]
        else:
            Qp = B + (A - B).scale(1 / tau)
            R = B + (C - B).scale(1 / tau)
            kids = [("blue", R, C, A), ("blue", Qp, R, B), ("red", R, Qp, A)]
        out = []
        for col, x, y, z in kids:
            ct = classify(col, x, y, z)
            _, ra, rb, rc = ref[ct]
            out.append(Placement(ct, _motion_from_frame((ra, rb, rc), (x, y, z))))
        placements[tid] = tuple(out)
    return TilingSystem("penrose_triangles", K, protos, SubstitutionRule(tau, placements),
                        notes="Robinson triangles (legs e1 apex-B, e2 apex-C; bases e3 acute, e4 obtuse), "
                              "inflation tau")


# --------------------------------------------------------------------------

def _pinwheel(name, d, long_leg, short_leg, dissect_small, dissect_big, interval, note):
    """Generic (a,b)-pinwheel: c*T splits by the altitude into two similar triangles."""
    K = NumberField([1, 0, -d], interval, name=f"Q(sqrt{d})")
    s = K.gen
    zero = Vec(K.zero, K.zero)
    ref = {
        "T": (zero, Vec(K(long_leg), K.zero), Vec(K.zero, K(short_leg))),
        "T_m": (zero, Vec(K(-long_leg), K.zero), Vec(K.zero, K(short_leg))),
    }
    protos = {}
    for tid, (R, L, S) in ref.items():
        vs = (R, L, S) if orient(R, L, S) > 0 else (R, S, L)
        protos[tid] = ProtoTile(tid, vs, ("e",) * 3)

    def place(R, L, S, pieces, k):
        # local frame: R at origin, L on +x at k*long_leg, S on +y at k*short_leg
        u = (L - R).scale(K(1) / (k * long_leg))
        v = (S - R).scale(K(1) / (k * short_leg))
        f = lambda p: R + u.scale(K(p[0])) + v.scale(K(p[1]))
        return [(f(r), f(l), f(q)) for r, l, q in pieces]

    placements = {}
    for tid, (R0, L0, S0) in ref.items():
        R, L, S = R0.scale(s), L0.scale(s), S0.scale(s)
        # foot of the altitude from R onto LS
        w = S - L
        H = L + w.scale((R - L).dot(w) / w.norm2())
        kids = place(H, R, S, dissect_small[1], dissect_small[0]) + place(H, L, R, dissect_big[1], dissect_big[0])
        out = []
        for r, l, q in kids:
            ct = "T" if orient(r, l, q) > 0 else "T_m"
            out.append(Placement(ct, _motion_from_frame(ref[ct], (r, l, q))))
        placements[tid] = tuple(out)
    return TilingSystem(name, K, protos, SubstitutionRule(s, placements), notes=note)


def _grid_pieces(k, a, b):
    """Split the k-scaled right triangle (legs k*a along x, k*b along y) into k^2 unit copies.

    Rectangles are cut along their lower-left to upper-right diagonal.
    """
    out = []
    for j in range(k):
        for i in range(k - j):
            x0, y0 = i * a, j * b
            if i + j < k - 1:
                out.append(((x0 + a, y0), (x0, y0), (x0 + a, y0 + b)))
                out.append(((x0, y0 + b), (x0 + a, y0 + b), (x0, y0)))
            else:
                out.append(((x0, y0), (x0 + a, y0), (x0, y0 + b)))
    return out


def pinwheel() -> TilingSystem:
    return _pinwheel("pinwheel", 5, 2, 1, (1, _grid_pieces(1, 2, 1)), (2, _grid_pieces(2, 2, 1)),
                     (2, 3), "1-2-sqrt5 right triangle and its mirror, inflation sqrt5")


def pinwheel_2_3() -> TilingSystem:
    return _pinwheel("pinwheel_2_3", 13, 3, 2, (2, _grid_pieces(2, 3, 2)), (3, _grid_pieces(3, 3, 2)),
                     (3, 4), "2-3-sqrt13 right triangle and its mirror, inflation sqrt13")


# --------------------------------------------------------------------------

def _gr(N, terms):
    """Group-ring element from ``{power: coeff}``."""
    return GroupRingElement.from_dict(N, terms)


def penrose_combinatorial() -> CombinatorialComplexSpec:
    N = 10
    one, t = {0: 1}, {1: 1}
    z = {}

    def m(rows):
        return [[_gr(N, e) for e in r] for r in rows]

    def mono(k, c=1):
        return {k % N: c}

    d1 = m([[{0: 1, 1: -1}, mono(0, -1), mono(1, -1), mono(0, -1)],
            [z, one, one, t]])
    d2 = m([[mono(0, -1), t, mono(4), mono(7, -1)],
            [mono(0, -1), mono(9), mono(1, -1), mono(8)],
            [one, mono(5, -1), z, z],
            [z, z, one, mono(5, -1)]])
    p2 = m([[mono(7), z, z, mono(4)],
            [z, mono(3), mono(6), z],
            [mono(3), z, mono(4), one],
            [z, mono(7), one, mono(6)]])
    p1 = m([[z, z, z, mono(8)],
            [mono(4), z, mono(7, -1), z],
            [mono(7, -1), z, z, z],
            [z, mono(3, -1), z, mono(5, -1)]])
    faces = [(f"f{i}", N, 1) for i in range(1, 5)]
    edges = [(f"e{i}", N, 1) for i in range(1, 5)]
    verts = [("alpha", 2, 1), ("gamma", 2, 1)]
    return CombinatorialComplexSpec("penrose_combinatorial", N, faces, edges, verts,
                                    {1: d1, 2: d2}, {1: p1, 2: p2},
                                    notes="Penrose complex over Z[t]/(t^10-1); vertex basis (alpha, gamma) "
                                          "with alpha = t beta, gamma = t delta")


BUILDERS = {
    "chair": chair,
    "penrose_triangles": penrose_triangles,
    "pinwheel": pinwheel,
    "pinwheel_2_3": pinwheel_2_3,
    "penrose_combinatorial": penrose_combinatorial,
    "square": square,
}
