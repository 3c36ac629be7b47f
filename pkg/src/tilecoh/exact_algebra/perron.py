"""Perron eigen-data of primitive integer matrices, root-of-unity tests, and field equality."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np
from gmpy2 import mpq

from . import poly
from .linalg import charpoly
from .numbers import AlgebraicNumber, FieldElement, NumberField


class NotPrimitiveError(ValueError):
    pass


def is_primitive(M) -> bool:
    """True iff some power ``M^k`` (``k <= (n-1)^2 + 1``) is entrywise positive."""
    A = np.asarray(M, dtype=object)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("primitivity needs a square matrix")
    if (A < 0).any():
        raise ValueError("primitivity is defined for nonnegative matrices")
    n = A.shape[0]
    if n == 0:
        return False
    B = (A > 0).astype(np.int64)
    P = B.copy()
    bound = (n - 1) ** 2 + 1
    for _ in range(bound):
        if P.all():
            return True
        P = ((P @ B) > 0).astype(np.int64)
    return bool(P.all())


@dataclass
class PerronData:
    """Perron eigenvalue ``lam`` and normalized left eigenvector ``r`` of ``M`` (``r M = lam r``).

    ``r`` lives in ``Q(lam)``.  In the noninteger case ``r_powers[i]`` lists the
    integer coefficients of ``r[i]`` as a polynomial in ``1/lam`` (constant first).
    """

    matrix: list
    lam: AlgebraicNumber
    r: list  # FieldElements of lam.field
    normalization_case: str  # "integer" | "noninteger"
    charpoly: list = field(repr=False, default_factory=list)
    r_powers: list = field(default_factory=list)

    @property
    def field(self) -> NumberField:
        return self.lam.field

    def r_integers(self) -> list[int]:
        if self.normalization_case != "integer":
            raise ValueError("r is not an integer vector in the noninteger case")
        return [int(x.c[0]) for x in self.r]

    def to_json(self) -> dict:
        d = {"lambda": self.lam.to_json(), "normalization_case": self.normalization_case}
        if self.normalization_case == "integer":
            d["r"] = self.r_integers()
        else:
            d["r_inverse_lambda_coeffs"] = self.r_powers
            d["r_approx"] = [float(x) for x in self.r]
        return d


def perron_root(M) -> tuple[AlgebraicNumber, list]:
    """Exact Perron root of a primitive nonnegative integer matrix, with its characteristic polynomial."""
    cp = charpoly(M)
    facs = poly.factor(cp)
    approx = max(abs(z) for z in np.linalg.eigvals(np.asarray(M, dtype=float)))
    best = None
    for f, mult in facs:
        for lo, hi in poly.real_root_intervals(f):
            if lo <= 0 and hi <= 0:
                continue
            # refine to compare against the float estimate
            lo, hi = _refine_real(f, lo, hi, mpq(1, 10**12))
            if best is None or lo > best[2]:
                best = (f, mult, lo, hi)
    f, mult, lo, hi = best
    if mult != 1:
        raise NotPrimitiveError("Perron root is not simple")
    lam = AlgebraicNumber(list(reversed(f)), (lo, hi))
    if abs(float(lam) - approx) > 1e-6 * max(1.0, approx):
        raise NotPrimitiveError("largest real root is not the spectral radius")
    _check_dominant(cp, lam)
    return lam, cp


def _refine_real(f, lo, hi, width):
    s_lo = _sgn(poly.evaluate(f, lo))
    if s_lo == 0:
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _sgn(poly.evaluate(f, mid))
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _check_dominant(cp, lam: AlgebraicNumber) -> None:
    """Every other root of ``cp`` has modulus strictly below ``lam`` (rigorous boxes)."""
    lam_lo = mpq(lam.element().interval(mpq(1, 10**20))[0])
    lam_poly = lam.min_poly
    # drop one copy of lam's factor
    rest, rem = poly.divmod_(cp, lam_poly)
    assert not rem
    if poly.degree(rest) < 1:
        return
    for f, _ in poly.factor(rest):
        _check_factor_below(f, lam_lo)


def _check_factor_below(f, lam_lo) -> None:
    """All roots of the irreducible ``f`` lie strictly inside the disc of radius ``lam_lo``."""
    if poly.degree(f) == 1:
        root = -mpq(f[0]) / mpq(f[1])
        if root * root >= lam_lo * lam_lo:
            raise NotPrimitiveError("another eigenvalue has modulus >= the Perron root")
        return
    eps = mpq(1, 1000)
    while True:
        boxes = poly.complex_root_boxes(f, eps)
        if all(max(a * a, c * c) + max(b * b, d * d) < lam_lo * lam_lo for (a, b), (c, d) in boxes):
            return
        if eps < mpq(1, 10**30):
            raise NotPrimitiveError("another eigenvalue has modulus >= the Perron root")
        eps = eps / 10**6


def perron_data(M) -> PerronData:
    """Perron root and integer-polynomial left eigenvector of a primitive integer matrix.

    The eigenvector solves ``r (lam I - M) = 0`` by column reduction over
    ``Q(lam)``; denominators are then cleared and the vector rescaled by its
    gcd (integer ``lam``) or by ``lam^-p`` (irrational ``lam``).
    """
    A = [[int(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]
    if not is_primitive(A):
        raise NotPrimitiveError("matrix is not primitive")
    lam, cp = perron_root(A)
    K = lam.field
    lam_el = lam.element()
    n = len(A)
    # B = lam I - M ; column operations reduce B to lower triangular form
    B = [[(lam_el if i == j else K.zero) - A[i][j] for j in range(n)] for i in range(n)]
    r = _left_kernel_by_columns(B, K)
    r = _clear_denominators(r, K)
    if lam.is_integer():
        ints = [int(x.c[0]) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        if any(x < 0 for x in ints):
            ints = [-x for x in ints]
        r = [K(x) for x in ints]
        case = "integer"
        powers = []
    else:
        if any(x.sign() < 0 for x in r):
            r = [-x for x in r]
        p = max(poly.degree(x.to_poly()) for x in r)
        scale = lam_el ** (-p)
        powers = []
        for x in r:
            cs = list(x.c) + [mpq(0)] * (p + 1 - len(x.c))
            # x = sum c_j lam^j ; x / lam^p = sum c_j lam^{-(p-j)}
            powers.append([int(cs[p - k]) for k in range(p + 1)])
        r = [x * scale for x in r]
        case = "noninteger"
    data = PerronData(A, lam, r, case, cp, powers)
    verify_perron(data)
    return data


def _left_kernel_by_columns(B, K):
    """Nonzero ``r`` with ``r B = 0`` for a corank-1 matrix, via column echelon form."""
    n = len(B)
    C = [list(row) for row in B]
    pivot_rows = []
    col = 0
    for row in range(n):
        if col == n:
            break
        p = next((j for j in range(col, n) if C[row][j]), None)
        if p is None:
            continue
        if p != col:
            for rr in C:
                rr[col], rr[p] = rr[p], rr[col]
        inv = C[row][col].inverse()
        for rr in C:
            rr[col] = rr[col] * inv
        for j in range(n):
            if j != col and C[row][j]:
                f = C[row][j]
                for rr in C:
                    if rr[col]:
                        rr[j] = rr[j] - f * rr[col]
        pivot_rows.append(row)
        col += 1
    # C is now column-reduced: column k has a 1 in row pivot_rows[k], zeros in other pivot rows
    free = [i for i in range(n) if i not in pivot_rows]
    if len(free) != 1:
        raise NotPrimitiveError("eigenvalue is not simple")
    f = free[0]
    r = [K.zero] * n
    r[f] = K.one
    for k, pr in enumerate(pivot_rows):
        r[pr] = -C[f][k]
    return r


def _clear_denominators(r, K):
    den = 1
    for x in r:
        for c in x.c:
            d = int(c.denominator)
            den = den * d // gcd(den, d)
    ints = [[int(c * den) for c in x.c] for x in r]
    g = 0
    for row in ints:
        for c in row:
            g = gcd(g, c)
    return [K([mpq(c, g) for c in row]) for row in ints]


def verify_perron(data: PerronData) -> None:
    K = data.field
    lam = data.lam.element()
    A = data.matrix
    n = len(A)
    for j in range(n):
        acc = K.zero
        for i in range(n):
            if A[i][j]:
                acc = acc + data.r[i] * A[i][j]
        if acc != data.r[j] * lam:
            raise AssertionError("r is not a left eigenvector")
    if any(x.sign() <= 0 for x in data.r):
        raise AssertionError("Perron vector is not strictly positive")


# --------------------------------------------------------------------------

def unit_minimal_polynomial(c: FieldElement, s: FieldElement) -> list[int]:
    """Minimal polynomial over Q (primitive integer, ascending) of ``z = c + i s`` with ``c^2 + s^2 = 1``."""
    K = c.field
    if c * c + s * s != K.one:
        raise ValueError("not a unit complex number")
    if not s:
        # z = +-1 (c is rational)
        return poly.primitive_integer([-c.c[0], 1])
    # z is a root of x^2 - 2c x + 1 over K
    cp = c.to_poly()
    if K.degree == 1:
        res = [mpq(1), -2 * c.c[0], mpq(1)]
    else:
        res = poly.resultant_y(K.modulus, [[mpq(1)], poly.scale(cp, -2), [mpq(1)]])
    z_re, z_im = float(c), float(s)
    target = complex(z_re, z_im)
    best = None
    for f, _ in poly.factor(res):
        val = abs(sum(complex(a) * target**k for k, a in enumerate(f))) / max(abs(a) for a in f)
        if best is None or val < best[0]:
            best = (val, f)
    return best[1]


def is_root_of_unity(c: FieldElement, s: FieldElement) -> int | None:
    """Order of ``z = c + i s`` if it is a root of unity, else ``None``."""
    f = unit_minimal_polynomial(c, s)
    if f[-1] != 1:
        return None
    deg = len(f) - 1
    n = 1
    while True:
        phi = poly.totient(n)
        if phi == deg and list(poly.cyclotomic(n)) == f:
            # Phi_n has all primitive n-th roots; identify the one closest to z
            return n
        if phi > deg and n > 2 * deg * deg + 6:
            return None
        n += 1


# --------------------------------------------------------------------------

def roots_in_field(f: Sequence, K: NumberField) -> list[FieldElement]:
    """Roots in ``K`` of a rational polynomial ``f`` (ascending), by the norm method."""
    f = poly.monic(poly.to_mpq(f))
    roots = []
    if K.degree == 1:
        for g, _ in poly.factor(f):
            if len(g) == 2:
                roots.append(K(mpq(-g[0], g[1])))
        return roots
    alpha = K.gen
    for s in range(0, 20):
        # g(x) = f(x - s*alpha); norm N(x) = Res_y(m(y), f(x - s y))
        h = _shift_poly_coeffs(f, s)
        N = poly.resultant_y(K.modulus, h)
        if poly.degree(poly.gcd_(N, poly.derivative(N))) > 0:
            continue
        for Ni, _ in poly.factor(N):
            # factor of f over K: gcd_K(f(x), Ni(x + s alpha))
            Ni_shift = _compose_shift(Ni, s * alpha, K)
            fK = [K(c) for c in f]
            g = _poly_gcd_K(fK, Ni_shift, K)
            if len(g) == 2:
                roots.append(-g[0] / g[1])
        return roots
    raise RuntimeError("no squarefree norm found")


def _shift_poly_coeffs(f, s):
    """Coefficients in x (each a poly in y, ascending) of f(x - s y)."""
    n = len(f) - 1
    out = [[] for _ in range(n + 1)]
    from math import comb
    for k, a in enumerate(f):
        if not a:
            continue
        # (x - s y)^k = sum_j C(k,j) x^j (-s y)^{k-j}
        for j in range(k + 1):
            coeff = a * comb(k, j) * (-s) ** (k - j)
            ypow = k - j
            row = out[j]
            while len(row) <= ypow:
                row.append(mpq(0))
            row[ypow] += coeff
    return out


def _compose_shift(p, shift: FieldElement, K):
    """p(x + shift) as a list of K-coefficients (ascending)."""
    from math import comb
    n = len(p) - 1
    out = [K.zero] * (n + 1)
    powers = [K.one]
    for _ in range(n):
        powers.append(powers[-1] * shift)
    for k, a in enumerate(p):
        if not a:
            continue
        for j in range(k + 1):
            out[j] = out[j] + powers[k - j] * (a * comb(k, j))
    return out


def _poly_gcd_K(a, b, K):
    def strip(p):
        p = list(p)
        while p and not p[-1]:
            p.pop()
        return p

    def rem(p, q):
        p = list(p)
        dq = len(q) - 1
        inv = q[-1].inverse()
        for k in range(len(p) - 1, dq - 1, -1):
            c = p[k] * inv
            if c:
                for j in range(dq + 1):
                    p[k - dq + j] = p[k - dq + j] - c * q[j]
        return strip(p[:dq])

    a, b = strip(a), strip(b)
    while b:
        a, b = b, rem(a, b)
    inv = a[-1].inverse()
    return [c * inv for c in a]


@dataclass
class FieldEquality:
    equal: bool
    b_in_a: FieldElement | None  # b expressed in Q(a)
    a_in_b: FieldElement | None

    def __bool__(self) -> bool:
        return self.equal


def _express(b: AlgebraicNumber, a: AlgebraicNumber) -> FieldElement | None:
    """``b`` as an element of ``Q(a)`` (real embedding checked), or ``None``."""
    K = a.field
    for beta in roots_in_field(b.min_poly, K):
        lo_b, hi_b = b.interval
        width = (hi_b - lo_b) if hi_b > lo_b else mpq(1, 10**12)
        while True:
            lo, hi = beta.interval(width / 4)
            if lo >= lo_b and hi <= hi_b:
                return beta
            if hi < lo_b or lo > hi_b:
                break
            # beta's enclosure straddles b's interval boundary: narrow b's interval
            lo_b, hi_b = _refine_real(b.min_poly, lo_b, hi_b, width / 4)
            width = max(hi_b - lo_b, mpq(1, 10**40))
            if hi_b == lo_b:
                if beta.interval()[0] == lo_b == beta.interval()[1]:
                    return beta
    return None


def field_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> FieldEquality:
    """Decide ``Q(a) == Q(b)`` as subfields of R (both irrational)."""
    if a.is_rational() or b.is_rational():
        raise ValueError("field_equal expects irrational algebraic numbers")
    if a.degree != b.degree:
        return FieldEquality(False, None, None)
    b_in_a = _express(b, a)
    a_in_b = _express(a, b)
    return FieldEquality(b_in_a is not None and a_in_b is not None, b_in_a, a_in_b)


def prime_factors(n: int) -> list[int]:
    n = abs(int(n))
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out
