"""Dense univariate polynomials over Q.

Polynomials are plain lists of rationals in *ascending* order
(``p[i]`` is the coefficient of ``x**i``), with trailing zeros stripped.
The empty list is the zero polynomial.  Factorization, resultants and
complex root isolation are delegated to sympy.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import sympy
from gmpy2 import mpq

_X = sympy.Symbol("x")


def strip(p: Iterable) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def to_mpq(p: Iterable) -> list:
    return strip(mpq(c) for c in p)


def degree(p: Sequence) -> int:
    return len(p) - 1 if p else -1


def add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return strip((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return strip((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def scale(p: Sequence, c) -> list:
    return strip(c * a for a in p)


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def divmod_(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Euclidean division over Q."""
    q = strip(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [mpq(c) for c in p]
    dq = len(q) - 1
    lead = mpq(q[-1])
    quo = [mpq(0)] * max(len(r) - dq, 0)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] / lead
        if c == 0:
            continue
        quo[k - dq] = c
        for j in range(dq + 1):
            r[k - dq + j] -= c * q[j]
    return strip(quo), strip(r[:dq])


def monic(p: Sequence) -> list:
    p = strip(p)
    if not p:
        return []
    lead = mpq(p[-1])
    return [mpq(c) / lead for c in p]


def gcd_(p: Sequence, q: Sequence) -> list:
    a, b = strip(p), strip(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def xgcd(p: Sequence, q: Sequence) -> tuple[list, list, list]:
    """Return ``(g, u, v)`` with ``u*p + v*q == g`` and ``g`` monic."""
    r0, r1 = strip(p), strip(q)
    s0, s1 = [mpq(1)], []
    t0, t1 = [], [mpq(1)]
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [], []
    lead = mpq(r0[-1])
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> list:
    return strip(i * p[i] for i in range(1, len(p)))


def primitive_integer(p: Sequence) -> list[int]:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    p = strip(p)
    if not p:
        return []
    den = 1
    for c in p:
        d = int(mpq(c).denominator)
        den = den * d // gcd(den, d)
    ints = [int(mpq(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def from_descending(coeffs: Sequence) -> list:
    return to_mpq(reversed(list(coeffs)))


def to_descending(p: Sequence) -> list:
    return list(reversed(list(p)))


def to_sympy(p: Sequence) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(int(mpq(c).numerator), int(mpq(c).denominator))
                       for c in reversed(p)] or [0], _X, domain="QQ")


def from_sympy(P: sympy.Poly) -> list:
    return to_mpq(reversed([mpq(int(c.p), int(c.q)) for c in P.all_coeffs()]))


def factor(p: Sequence) -> list[tuple[list[int], int]]:
    """Irreducible factors over Q as primitive integer polynomials with multiplicity."""
    P = sympy.Poly(list(reversed(primitive_integer(p))), _X, domain="ZZ")
    _, facs = P.factor_list()
    out = []
    for f, e in facs:
        out.append((primitive_integer([int(c) for c in reversed(f.all_coeffs())]), e))
    out.sort(key=lambda fe: (len(fe[0]), fe[0]))
    return out


def is_irreducible(p: Sequence) -> bool:
    p = strip(p)
    if len(p) <= 2:
        return len(p) == 2
    facs = factor(p)
    return len(facs) == 1 and facs[0][1] == 1


def resultant_y(f: Sequence, h_coeffs: Sequence[Sequence]) -> list:
    """``Res_y(f(y), H(x, y))`` where ``H = sum_k h_coeffs[k](y) * x**k``."""
    y = sympy.Symbol("y")
    F = sum(sympy.Rational(int(mpq(c).numerator), int(mpq(c).denominator)) * y**i
            for i, c in enumerate(f))
    H = 0
    for k, hk in enumerate(h_coeffs):
        H += _X**k * sum(sympy.Rational(int(mpq(c).numerator), int(mpq(c).denominator)) * y**i
                         for i, c in enumerate(hk))
    R = sympy.resultant(sympy.Poly(F, y), sympy.Poly(H, y))
    return from_sympy(sympy.Poly(R, _X, domain="QQ"))


def real_root_intervals(p: Sequence) -> list[tuple[mpq, mpq]]:
    """Disjoint isolating intervals of the distinct real roots, increasing."""
    P = sympy.Poly(list(reversed(primitive_integer(p))), _X, domain="ZZ")
    out = []
    for (lo, hi), _ in P.intervals():
        out.append((mpq(int(lo.p), int(lo.q)), mpq(int(hi.p), int(hi.q))))
    return out


def complex_root_boxes(p: Sequence, eps=None) -> list[tuple[tuple[mpq, mpq], tuple[mpq, mpq]]]:
    """Isolating boxes ``((re_lo, im_lo), (re_hi, im_hi))`` for all complex roots.

    Real roots come back as degenerate boxes with zero imaginary width.
    """
    P = sympy.Poly(list(reversed(primitive_integer(p))), _X, domain="ZZ")
    kwargs = {"all": True}
    if eps is not None:
        kwargs["eps"] = sympy.Rational(eps)
    real, cplx = P.intervals(**kwargs)
    out = []
    for (lo, hi), _ in real:
        out.append(((mpq(int(lo.p), int(lo.q)), mpq(0)), (mpq(int(hi.p), int(hi.q)), mpq(0))))
    for (z0, z1), _ in cplx:
        # corners come back as sympy complex numbers
        a, b = sympy.sympify(z0).as_real_imag()
        c, d = sympy.sympify(z1).as_real_imag()
        out.append(((_q(a), _q(b)), (_q(c), _q(d))))
    return out


def _q(r) -> mpq:
    r = sympy.Rational(r)
    return mpq(int(r.p), int(r.q))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_(num, list(cyclotomic(d)))
            assert not rem
    return tuple(int(c) for c in num)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def format_poly(p: Sequence, var: str = "t") -> str:
    """Human-readable form, highest degree first (``t^4-t^3+t^2-t+1``)."""
    p = strip(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = mpq(p[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if a == 1 else f"{a}{mon}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s
