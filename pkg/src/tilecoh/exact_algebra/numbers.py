"""Exact arithmetic in number fields ``Q[x]/(m(x))``.

A :class:`NumberField` optionally carries a real embedding, given by a
rational interval isolating one real root of ``m``.  With an embedding
the sign of any element is decidable: zero is tested exactly on the
power-basis coefficients and nonzero values are separated from zero by
refining the isolating interval.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

from . import poly


class FieldError(ValueError):
    """Raised for an invalid field description (reducible or non-monic polynomial, bad interval)."""


def as_mpq(value) -> mpq:
    if isinstance(value, str):
        return mpq(Fraction(value.strip()))
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


class NumberField:
    """The field ``Q(theta)`` with ``theta`` a root of the monic integer polynomial ``min_poly``.

    ``min_poly`` is given highest degree first.  ``interval``, when present,
    isolates the real root used as the embedding of ``theta``.
    """

    def __init__(self, min_poly: Sequence[int], interval: tuple | None = None,
                 check: bool = True, name: str | None = None):
        m = poly.from_descending(min_poly)
        if not m or len(m) < 2:
            raise FieldError("minimal polynomial must have positive degree")
        if m[-1] != 1 or any(c.denominator != 1 for c in m):
            raise FieldError(f"minimal polynomial {list(min_poly)} must be monic with integer coefficients")
        if check and not poly.is_irreducible(m):
            raise FieldError(f"minimal polynomial {poly.format_poly(m, 'x')} is reducible over Q")
        self.modulus = m
        self.degree = len(m) - 1
        self.name = name
        self._key = tuple(int(c) for c in m)
        # x**k mod m for k in [n, 2n-2]
        n = self.degree
        table = {}
        cur = [mpq(0)] * n
        if n > 0:
            cur = [-m[i] for i in range(n)]  # x**n
        for k in range(n, 2 * n - 1):
            table[k] = tuple(cur)
            top = cur[-1]
            nxt = [mpq(0)] + list(cur[:-1])
            cur = [nxt[i] - top * m[i] for i in range(n)]
        self._reduce = table
        self.interval = None
        self.declared_interval = None
        if interval is not None:
            lo, hi = as_mpq(interval[0]), as_mpq(interval[1])
            if lo > hi:
                lo, hi = hi, lo
            # kept verbatim for serialization; ``interval`` gets refined in place
            self.declared_interval = (lo, hi)
            self._set_interval(lo, hi, check)
        self._zero = FieldElement(self, (mpq(0),) * n)
        self._one = FieldElement(self, (mpq(1),) + (mpq(0),) * (n - 1))

    # -- embedding -------------------------------------------------------
    def _set_interval(self, lo: mpq, hi: mpq, check: bool) -> None:
        m = self.modulus
        if lo == hi:
            if poly.evaluate(m, lo) != 0:
                raise FieldError("degenerate interval does not contain a root")
            self.interval = (lo, hi)
            self._exact_root = lo
            self._powers = None
            self._approx = float(lo)
            return
        self._exact_root = None
        if check:
            roots_inside = [r for r in poly.real_root_intervals(m)
                            if not (r[1] < lo or r[0] > hi)]
            if len(roots_inside) != 1:
                raise FieldError(f"interval [{lo}, {hi}] must isolate exactly one real root")
            # narrow to sympy's isolating interval intersected with ours
            a, b = roots_inside[0]
            lo, hi = max(lo, a), min(hi, b)
            if poly.evaluate(m, lo) == 0:
                hi = lo
            elif poly.evaluate(m, hi) == 0:
                lo = hi
            if lo == hi:
                self._set_interval(lo, hi, False)
                return
        self.interval = (lo, hi)
        self._sign_lo = _sgn(poly.evaluate(m, lo))
        self._powers = None
        self._approx = None
        self.refine(mpq(1, 2**60))

    @property
    def is_real(self) -> bool:
        return self.interval is not None

    def refine(self, width: mpq) -> None:
        """Shrink the isolating interval below ``width`` (bisection)."""
        if self._exact_root is not None:
            return
        lo, hi = self.interval
        m = self.modulus
        while hi - lo > width:
            mid = (lo + hi) / 2
            s = _sgn(poly.evaluate(m, mid))
            if s == 0:
                lo = hi = mid
                self._exact_root = mid
                break
            if s == self._sign_lo:
                lo = mid
            else:
                hi = mid
        self.interval = (lo, hi)
        self._powers = None
        self._approx = float((lo + hi) / 2)

    def _power_intervals(self):
        if self._powers is None:
            lo, hi = self.interval
            pows = [(mpq(1), mpq(1))]
            for _ in range(1, self.degree):
                a, b = pows[-1]
                cands = (a * lo, a * hi, b * lo, b * hi)
                pows.append((min(cands), max(cands)))
            self._powers = pows
        return self._powers

    def approx_generator(self) -> float:
        if self.interval is None:
            raise FieldError("field has no real embedding")
        return self._approx

    # -- elements --------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            coeffs = [as_mpq(c) for c in value]
            if len(coeffs) != self.degree:
                raise FieldError(f"coefficient vector has length {len(coeffs)}, expected {self.degree}")
            return FieldElement(self, tuple(coeffs))
        c = as_mpq(value)
        return FieldElement(self, (c,) + (mpq(0),) * (self.degree - 1))

    def from_poly(self, p: Sequence) -> "FieldElement":
        """Reduce a rational polynomial (ascending) modulo ``min_poly``."""
        p = [as_mpq(c) for c in p]
        if len(p) > 2 * self.degree - 1:
            _, r = poly.divmod_(p, self.modulus)
            p = r
        return FieldElement(self, self._reduce_list(p))

    def _reduce_list(self, p: list) -> tuple:
        n = self.degree
        out = list(p[:n]) + [mpq(0)] * max(0, n - len(p))
        for k in range(n, len(p)):
            c = p[k]
            if c:
                row = self._reduce[k]
                for i in range(n):
                    out[i] += c * row[i]
        return tuple(out)

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self(-self.modulus[0])
        return FieldElement(self, (mpq(0), mpq(1)) + (mpq(0),) * (self.degree - 2))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        if self._key != other._key or (self.interval is None) != (other.interval is None):
            return False
        if self.interval is None:
            return True
        # isolating intervals of one polynomial denote the same root iff they overlap
        return not (self.interval[1] < other.interval[0] or other.interval[1] < self.interval[0])

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"NumberField({poly.format_poly(self.modulus, 'x')})"

    def descriptor(self) -> dict:
        d = {"min_poly": [int(c) for c in reversed(self.modulus)]}
        if self.declared_interval is not None:
            d["generator_interval"] = [str(Fraction(int(q.numerator), int(q.denominator)))
                                       for q in self.declared_interval]
        return d


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class FieldElement:
    """An element of a :class:`NumberField` in the power basis."""

    __slots__ = ("field", "c", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.c = coeffs
        self._hash = None

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, mpq, Fraction)) or type(other).__name__ == "mpz":
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            n = len(self.c)
            if n == 1:
                return FieldElement(self.field, (self.c[0] * other.c[0],))
            if n == 2:
                # x^2 = p0 + p1 x
                a0, a1 = self.c
                b0, b1 = other.c
                hi = a1 * b1
                p0, p1 = self.field._reduce[2]
                return FieldElement(self.field, (a0 * b0 + hi * p0, a0 * b1 + a1 * b0 + hi * p1))
            prod = [mpq(0)] * (2 * n - 1)
            for i, a in enumerate(self.c):
                if a:
                    for j, b in enumerate(other.c):
                        if b:
                            prod[i + j] += a * b
            return FieldElement(self.field, self.field._reduce_list(prod))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = o.c[0]
        return FieldElement(self.field, tuple(a * s for a in self.c))

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        if len(self.c) == 1:
            return FieldElement(self.field, (1 / self.c[0],))
        g, u, _ = poly.xgcd(poly.strip(self.c), self.field.modulus)
        assert len(g) == 1
        return self.field.from_poly(u)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.c == other.c and (self.field is other.field or self.field == other.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def sign(self) -> int:
        """Exact sign under the field's real embedding."""
        if not any(self.c):
            return 0
        f = self.field
        if f.interval is None:
            raise FieldError("sign requested in a field without real embedding")
        if len(self.c) == 1 or not any(self.c[1:]):
            return _sgn(self.c[0])
        if f._exact_root is not None:
            return _sgn(poly.evaluate(list(self.c), f._exact_root))
        while True:
            lo, hi = _eval_interval(self.c, f._power_intervals())
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            lo_t, hi_t = f.interval
            f.refine((hi_t - lo_t) / 2**32)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        f = self.field
        if len(self.c) == 1:
            return float(self.c[0])
        x = f.approx_generator()
        acc = 0.0
        for a in reversed(self.c):
            acc = acc * x + float(a)
        return acc

    def interval(self, width=None) -> tuple[mpq, mpq]:
        """Rational enclosure of the embedded value."""
        f = self.field
        if len(self.c) == 1 or not any(self.c[1:]):
            return self.c[0], self.c[0]
        if width is not None:
            while True:
                lo, hi = _eval_interval(self.c, f._power_intervals())
                if hi - lo <= width:
                    return lo, hi
                lo_t, hi_t = f.interval
                f.refine((hi_t - lo_t) / 2**16)
        return _eval_interval(self.c, f._power_intervals())

    def to_poly(self) -> list:
        return poly.strip(self.c)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(int(a.numerator), int(a.denominator)) for a in self.c]

    def to_json(self) -> list[str]:
        return [_fmt_rational(a) for a in self.c]

    def __repr__(self) -> str:
        if len(self.c) == 1:
            return str(self.c[0])
        return f"({poly.format_poly(self.c, 'a')})"


def _fmt_rational(a: mpq) -> str:
    a = mpq(a)
    if a.denominator == 1:
        return str(int(a.numerator))
    return f"{int(a.numerator)}/{int(a.denominator)}"


def _eval_interval(coeffs, powers) -> tuple[mpq, mpq]:
    lo = hi = mpq(0)
    for c, (a, b) in zip(coeffs, powers):
        if c == 0:
            continue
        x, y = c * a, c * b
        if x > y:
            x, y = y, x
        lo += x
        hi += y
    return lo, hi


def rational_field() -> NumberField:
    return NumberField([1, 0], (0, 0), check=False, name="Q")


class AlgebraicNumber:
    """A real algebraic number: irreducible primitive integer polynomial plus isolating interval."""

    def __init__(self, min_poly: Sequence[int], interval: tuple):
        p = poly.primitive_integer(poly.from_descending(min_poly))
        if not p:
            raise FieldError("zero polynomial")
        if not poly.is_irreducible(p):
            raise FieldError(f"{poly.format_poly(p, 'x')} is reducible over Q")
        self.min_poly = p  # ascending, primitive integer
        lo, hi = as_mpq(interval[0]), as_mpq(interval[1])
        roots = [r for r in poly.real_root_intervals(p) if not (r[1] < lo or r[0] > hi)]
        if len(roots) != 1:
            raise FieldError("interval must isolate exactly one real root")
        a, b = roots[0]
        self.interval = (max(lo, a), min(hi, b))
        self._field = None

    @classmethod
    def rational(cls, q) -> "AlgebraicNumber":
        q = as_mpq(q)
        return cls([int(q.denominator), -int(q.numerator)], (q, q))

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def is_rational(self) -> bool:
        return self.degree == 1

    def is_integer(self) -> bool:
        return self.degree == 1 and self.min_poly[1] in (1, -1)

    def as_rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError("not rational")
        return mpq(-self.min_poly[0], self.min_poly[1])

    def is_algebraic_integer(self) -> bool:
        return abs(self.min_poly[-1]) == 1

    def monic_min_poly(self) -> list:
        return poly.monic(self.min_poly)

    @property
    def field(self) -> NumberField:
        """``Q(self)`` with ``self`` as generator (requires an algebraic integer for the monic basis)."""
        if self._field is None:
            if self.is_rational():
                q = self.as_rational()
                F = NumberField([1, 0], (0, 0), check=False, name="Q")
                self._field = F
                self._value_in_field = F(q)
            elif self.is_algebraic_integer():
                desc = [int(c) for c in reversed(self.min_poly)]
                if desc[0] < 0:
                    desc = [-c for c in desc]
                self._field = NumberField(desc, self.interval, check=False)
                self._value_in_field = self._field.gen
            else:
                # theta = lead * alpha is an algebraic integer
                a = self.min_poly
                n = len(a) - 1
                lead = a[-1]
                desc = [1] + [a[n - 1 - k] * lead**k for k in range(n)]
                lo, hi = self.interval
                iv = (lo * lead, hi * lead) if lead > 0 else (hi * lead, lo * lead)
                self._field = NumberField(desc, iv, check=False)
                self._value_in_field = self._field.gen / lead
        return self._field

    def element(self) -> FieldElement:
        """This number as an element of :attr:`field`."""
        self.field
        return self._value_in_field

    def __float__(self) -> float:
        return float(self.element())

    def sign(self) -> int:
        return self.element().sign()

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.as_rational())
        return f"AlgebraicNumber({poly.format_poly(self.min_poly, 'x')} ~ {float(self):.12g})"

    def to_json(self) -> dict:
        return {"min_poly": [int(c) for c in reversed(self.min_poly)],
                "interval": [_fmt_rational(self.interval[0]), _fmt_rational(self.interval[1])],
                "approx": float(self)}
