"""Exact plane geometry over a real number field.

Points are pairs of field elements.  A rigid motion is ``p -> R F p + b``
where ``R`` is a rotation stored as ``(cos, sin)``, ``F`` is either the
identity or the reflection ``(x, y) -> (x, -y)`` and ``b`` a translation.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

from ..exact_algebra.numbers import FieldElement, NumberField


class Vec:
    __slots__ = ("x", "y", "_key")

    def __init__(self, x: FieldElement, y: FieldElement):
        self.x = x
        self.y = y
        self._key = None

    @classmethod
    def of(cls, field: NumberField, x, y) -> "Vec":
        return cls(field(x), field(y))

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.x.c, self.y.c)
        return self._key

    def __add__(self, o: "Vec") -> "Vec":
        return Vec(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "Vec") -> "Vec":
        return Vec(self.x - o.x, self.y - o.y)

    def __neg__(self) -> "Vec":
        return Vec(-self.x, -self.y)

    def scale(self, c) -> "Vec":
        return Vec(self.x * c, self.y * c)

    def dot(self, o: "Vec") -> FieldElement:
        return self.x * o.x + self.y * o.y

    def cross(self, o: "Vec") -> FieldElement:
        return self.x * o.y - self.y * o.x

    def norm2(self) -> FieldElement:
        return self.dot(self)

    def cmul(self, o: "Vec") -> "Vec":
        """Complex product, reading points as ``x + i y``."""
        return Vec(self.x * o.x - self.y * o.y, self.x * o.y + self.y * o.x)

    def conj(self) -> "Vec":
        return Vec(self.x, -self.y)

    def __eq__(self, o) -> bool:
        return isinstance(o, Vec) and self.key() == o.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def approx(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    def __repr__(self) -> str:
        return f"Vec({self.x!r}, {self.y!r})"


class Motion:
    """Rigid motion ``p -> R F p + b`` of the plane."""

    __slots__ = ("rot", "trans", "reflect", "_key")

    def __init__(self, rot: Vec, trans: Vec, reflect: bool = False):
        self.rot = rot
        self.trans = trans
        self.reflect = bool(reflect)
        self._key = None

    @classmethod
    def identity(cls, field: NumberField) -> "Motion":
        return cls(Vec(field.one, field.zero), Vec(field.zero, field.zero))

    @classmethod
    def translation(cls, b: Vec) -> "Motion":
        f = b.x.field
        return cls(Vec(f.one, f.zero), b)

    def is_unit(self) -> bool:
        return self.rot.norm2() == self.rot.x.field.one

    def apply(self, p: Vec) -> Vec:
        if self.reflect:
            p = p.conj()
        return self.rot.cmul(p) + self.trans

    def linear(self, v: Vec) -> Vec:
        if self.reflect:
            v = v.conj()
        return self.rot.cmul(v)

    def compose(self, other: "Motion") -> "Motion":
        """``self o other``."""
        r2 = other.rot.conj() if self.reflect else other.rot
        return Motion(self.rot.cmul(r2), self.apply(other.trans), self.reflect != other.reflect)

    def inverse(self) -> "Motion":
        r = self.rot if self.reflect else self.rot.conj()
        inv = Motion(r, Vec(self.rot.x.field.zero, self.rot.x.field.zero), self.reflect)
        return Motion(r, -inv.apply(self.trans), self.reflect)

    def scaled(self, c) -> "Motion":
        """Conjugate by the dilation ``p -> c p`` (same rotation, translation times ``c``)."""
        return Motion(self.rot, self.trans.scale(c), self.reflect)

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.rot.key(), self.trans.key(), self.reflect)
        return self._key

    def __eq__(self, o) -> bool:
        return isinstance(o, Motion) and self.key() == o.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def angle(self) -> float:
        return math.atan2(float(self.rot.y), float(self.rot.x))

    def __repr__(self) -> str:
        return f"Motion(rot={self.rot!r}, trans={self.trans!r}, reflect={self.reflect})"


def orient(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the turn ``a -> b -> c`` (1 counterclockwise, -1 clockwise, 0 collinear)."""
    return (b - a).cross(c - a).sign()


def signed_area2(points: Sequence[Vec]) -> FieldElement:
    """Twice the signed (shoelace) area."""
    n = len(points)
    acc = points[0].x.field.zero
    for i in range(n):
        acc = acc + points[i].cross(points[(i + 1) % n])
    return acc


def on_open_segment(p: Vec, a: Vec, b: Vec) -> bool:
    """``p`` lies strictly between ``a`` and ``b``."""
    d = b - a
    w = p - a
    if w.cross(d):
        return False
    t = w.dot(d)
    return t.sign() > 0 and (t - d.norm2()).sign() < 0


def on_closed_segment(p: Vec, a: Vec, b: Vec) -> bool:
    return p == a or p == b or on_open_segment(p, a, b)


def segment_param(p: Vec, a: Vec, b: Vec) -> FieldElement:
    """Position of a point on line ``ab`` as ``(p-a).(b-a) / |b-a|^2``."""
    d = b - a
    return (p - a).dot(d) / d.norm2()


def rotation_between(src: Vec, dst: Vec) -> Vec | None:
    """The rotation taking direction ``src`` to ``dst`` if ``|src| = |dst|``, else ``None``."""
    n = src.norm2()
    if dst.norm2() != n:
        return None
    r = dst.cmul(src.conj())
    return Vec(r.x / n, r.y / n)


def motion_taking(src: Sequence[Vec], dst: Sequence[Vec]) -> Motion | None:
    """The orientation-preserving motion with ``src[i] -> dst[i]`` for all ``i``, if any."""
    r = rotation_between(src[1] - src[0], dst[1] - dst[0])
    if r is None:
        return None
    m = Motion(r, dst[0] - r.cmul(src[0]))
    if all(m.apply(p) == q for p, q in zip(src, dst)):
        return m
    return None


def bbox(points: Iterable[Vec]) -> tuple[float, float, float, float]:
    xs, ys = zip(*(p.approx() for p in points))
    return min(xs), min(ys), max(xs), max(ys)
