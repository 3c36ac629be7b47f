"""The group ring ``Z[t]/(t^N - 1)`` of a finite cyclic rotation group and its representations."""
from __future__ import annotations

from typing import Sequence

from . import poly
from .linalg import rank
from .numbers import NumberField


class GroupRingElement:
    """``sum(coeffs[i] * t**i)`` in ``Z[t]/(t^N - 1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        if len(coeffs) == 0:
            raise ValueError("group order must be at least 1")
        self.coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, N: int) -> "GroupRingElement":
        return cls((0,) * N)

    @classmethod
    def monomial(cls, N: int, power: int, coeff: int = 1) -> "GroupRingElement":
        c = [0] * N
        c[power % N] = coeff
        return cls(c)

    @classmethod
    def from_dict(cls, N: int, terms: dict) -> "GroupRingElement":
        c = [0] * N
        for p, a in terms.items():
            c[p % N] += a
        return cls(c)

    def _check(self, other: "GroupRingElement") -> None:
        if self.order != other.order:
            raise ValueError("group ring elements of different orders")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return GroupRingElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        self._check(other)
        return GroupRingElement([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GroupRingElement([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement([a * other for a in self.coeffs])
        self._check(other)
        N = self.order
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % N] += a * b
        return GroupRingElement(out)

    __rmul__ = __mul__

    def involution(self) -> "GroupRingElement":
        """``t -> t^{-1}``."""
        N = self.order
        return GroupRingElement([self.coeffs[(-i) % N] for i in range(N)])

    def automorphism(self, u: int) -> "GroupRingElement":
        """``t -> t^u`` (``u`` coprime to ``N``)."""
        N = self.order
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            out[(i * u) % N] += a
        return GroupRingElement(out)

    def shift(self, k: int) -> "GroupRingElement":
        """Multiply by ``t^k``."""
        N = self.order
        return GroupRingElement([self.coeffs[(i - k) % N] for i in range(N)])

    def augmentation(self) -> int:
        """Value at ``t = 1``."""
        return sum(self.coeffs)

    def reduce_mod(self, k: int) -> "GroupRingElement":
        """Image in ``Z[t]/(t^k - 1)`` for ``k | N``."""
        out = [0] * k
        for i, a in enumerate(self.coeffs):
            out[i % k] += a
        return GroupRingElement(out)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return other == 0 and not any(self.coeffs)
        return isinstance(other, GroupRingElement) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return poly.format_poly(self.coeffs, "t")

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def cyclotomic_factors(N: int) -> list[list[int]]:
    """Irreducible factors ``Phi_d`` (``d | N``) of ``t^N - 1``, ascending coefficients, ordered by ``d``."""
    if N < 1:
        raise ValueError("N must be positive")
    return [list(poly.cyclotomic(d)) for d in poly.divisors(N)]


def representation_field(d: int) -> NumberField:
    """``Q[t]/(Phi_d)`` with ``t`` as generator (no real embedding)."""
    return NumberField(list(reversed(poly.cyclotomic(d))), None, check=False, name=f"Q(zeta_{d})")


def _factor_index(phi: Sequence[int]) -> int:
    phi = tuple(int(c) for c in phi)
    n = 1
    while True:
        if poly.cyclotomic(n) == phi:
            return n
        if poly.totient(n) > len(phi) * 8 + 8 and n > 4 * len(phi) ** 2 + 16:
            raise ValueError(f"{phi} is not a cyclotomic polynomial")
        n += 1


def orbit_contains(d: int, orbit) -> bool:
    """Whether ``Phi_d`` divides ``t^k - eps`` for an orbit ``k`` or ``(k, eps)``."""
    k, eps = orbit if isinstance(orbit, tuple) else (orbit, 1)
    if eps == 1:
        return k % d == 0
    return (2 * k) % d == 0 and k % d != 0


def reduce_mod_factor(M: Sequence[Sequence[GroupRingElement]], phi: Sequence[int],
                      row_orbits: Sequence | None = None,
                      col_orbits: Sequence | None = None):
    """Reduce a group-ring matrix into the representation ``Q[t]/(phi)``.

    ``row_orbits``/``col_orbits`` describe each cell's summand: an orbit size ``k``
    for ``Z[t]/(t^k - 1)``, or a pair ``(k, eps)`` for ``Z[t]/(t^k - eps)``.  Cells
    whose summand does not contain ``phi`` are dropped.  Returns ``(matrix, rank)``.
    """
    d = _factor_index(phi)
    K = representation_field(d)
    rows = [i for i in range(len(M)) if row_orbits is None or orbit_contains(d, row_orbits[i])]
    ncols = len(M[0]) if M else (len(col_orbits) if col_orbits else 0)
    cols = [j for j in range(ncols) if col_orbits is None or orbit_contains(d, col_orbits[j])]
    out = []
    for i in range(len(M)):
        if i not in rows:
            continue
        out.append([K.from_poly(list(M[i][j].coeffs)) for j in cols])
    return out, (rank(out) if out and cols else 0)
