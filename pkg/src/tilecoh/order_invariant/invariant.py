"""The Perron functional ``mu`` on top cochains, its positive cone and its image."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..cohomology.cochain import CochainComplex, cochain_complex
from ..exact_algebra import poly
from ..exact_algebra.linalg import matvec
from ..exact_algebra.numbers import FieldElement
from ..exact_algebra.perron import PerronData, perron_data, prime_factors

log = logging.getLogger(__name__)

M_MAX = 64


class OracleDisagreement(AssertionError):
    """The sign of ``mu`` and the iteration oracle disagree: an arithmetic bug."""


@dataclass
class OrderedInvariant:
    """Perron data of ``phi_2^*`` on ``C^2`` with the induced order on the direct limit."""

    name: str
    matrix: list  # phi_2^* on integer cochains
    perron: PerronData
    coboundary: list | None = None  # delta^1, |C^2| x |C^1|
    kernel_log: list = field(default_factory=list)

    @property
    def lam(self):
        return self.perron.lam

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def is_integer(self) -> bool:
        return self.perron.normalization_case == "integer"

    def push(self, v, m: int = 1) -> list:
        for _ in range(m):
            v = matvec(self.matrix, v)
        return list(v)

    def at_level(self, x, k: int) -> list:
        v, k0 = x
        if k < k0:
            raise ValueError("cannot move an element down")
        return self.push(v, k - k0)

    def combine(self, terms) -> tuple:
        """``sum c_i x_i`` for ``terms = [(c, (v, k)), ...]`` at the common level."""
        k = max(x[1] for _, x in terms)
        out = [0] * self.n
        for c, x in terms:
            out = [a + c * b for a, b in zip(out, self.at_level(x, k))]
        return out, k

    def to_json(self) -> dict:
        return {"name": self.name, "cells": self.n, "perron": self.perron.to_json(),
                "mu_image": mu_image(self)}


def ordered_invariant(source, name: str | None = None) -> OrderedInvariant:
    """Build the invariant from a complex (``Sigma_0`` or ``Sigma_x``) or its cochain complex."""
    cc = source if isinstance(source, CochainComplex) else cochain_complex(source)
    M = cc.z_pullback(2)
    delta = cc.z_delta(1) if cc.dim(1) else None
    return OrderedInvariant(name or cc.complex.system, M, perron_data(M), delta)


def _check(inv: OrderedInvariant, v) -> list:
    if len(v) != inv.n:
        raise ValueError(f"cochain has {len(v)} entries, the complex has {inv.n} top cells")
    return [int(a) for a in v]


def mu(inv: OrderedInvariant, element) -> FieldElement:
    """``mu((v, k)) = lam^-k r.v`` exactly in ``Q(lam)``."""
    v, k = element
    v = _check(inv, v)
    if k < 0:
        raise ValueError("level must be nonnegative")
    K = inv.perron.field
    acc = K.zero
    for ri, vi in zip(inv.perron.r, v):
        if vi:
            acc = acc + ri * vi
    return acc * inv.lam.element() ** (-k) if k else acc


def eventually_zero(inv: OrderedInvariant, v) -> bool:
    return not any(inv.push(list(v), inv.n))


def positivity_oracle(inv: OrderedInvariant, v, m_max: int = M_MAX) -> int | None:
    """Least ``m <= m_max`` with ``(phi^*)^m v`` entrywise positive, or ``None``."""
    w = list(v)
    for m in range(m_max + 1):
        if all(a > 0 for a in w):
            return m
        w = matvec(inv.matrix, w)
    return None


def is_positive(inv: OrderedInvariant, element, m_max: int = M_MAX, escalate: int = 8) -> bool:
    """Membership of the class of ``element`` in the positive cone.

    The zero class is positive.  Otherwise the answer is ``mu > 0``, cross-checked
    against the iteration oracle; the bound ``m_max`` doubles up to ``escalate``
    times before a disagreement is reported.
    """
    v, k = element
    v = _check(inv, v)
    s = mu(inv, (v, k)).sign()
    if s == 0:
        # mu != 0 already rules out the zero class
        if eventually_zero(inv, v):
            return True
        inv.kernel_log.append((tuple(v), k))
        log.info("nonzero class with mu = 0: %s at level %d", v, k)
        return False
    target = v if s > 0 else [-a for a in v]
    bound = m_max
    for _ in range(escalate + 1):
        if positivity_oracle(inv, target, bound) is not None:
            return s > 0
        bound *= 2
    raise OracleDisagreement(f"mu has sign {s} but no power up to {bound // 2} makes the vector definite")


# --------------------------------------------------------------------------

def _bezout(xs: list[int]) -> list[int]:
    """Integers ``c`` with ``sum c_i x_i = gcd(xs)``."""
    g, coeffs = 0, [0] * len(xs)
    for i, x in enumerate(xs):
        if g == 0:
            g, coeffs[i] = abs(x), (1 if x >= 0 else -1)
            continue
        # extended gcd of g and x
        a0, a1, b0, b1, r0, r1 = 1, 0, 0, 1, g, x
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            a0, a1 = a1, a0 - q * a1
            b0, b1 = b1, b0 - q * b1
        if r0 < 0:
            r0, a0, b0 = -r0, -a0, -b0
        coeffs = [c * a0 for c in coeffs]
        coeffs[i] = b0
        g = r0
    return coeffs


def field_name(lam) -> str:
    """``Q(sqrt D)`` for a quadratic ``lam``, else the defining polynomial."""
    if lam.degree == 1:
        return "Q"
    f = lam.min_poly
    if lam.degree == 2:
        c, b, a = (int(x) for x in f)
        disc = b * b - 4 * a * c
        # squarefree kernel
        for p in prime_factors(disc):
            while disc % (p * p) == 0:
                disc //= p * p
        return f"Q(sqrt({disc}))"
    return f"Q[x]/({poly.format_poly(f, 'x')})"


def mu_image(inv: OrderedInvariant) -> dict:
    """Descriptor of ``mu(C)``: prime set of ``lam`` (integer case) or the field ``Q(lam)``."""
    lam = inv.lam
    if inv.is_integer:
        L = int(lam.as_rational())
        r = inv.perron.r_integers()
        w = _bezout(r)
        assert sum(a * b for a, b in zip(r, w)) == 1
        return {"kind": "integer", "lambda": L, "primes": prime_factors(L),
                "ring": f"Z[1/{L}]", "one_witness": w}
    return {"kind": "field", "min_poly": poly.format_poly(lam.min_poly, "x"),
            "min_poly_coeffs": [int(c) for c in reversed(lam.min_poly)],
            "field": field_name(lam), "lambda_approx": float(lam),
            "generators_in_inverse_lambda": inv.perron.r_powers}


def one_in_image(inv: OrderedInvariant) -> tuple | None:
    """A level-0 cochain with ``mu = 1`` (integer case only)."""
    if not inv.is_integer:
        return None
    w = mu_image(inv)["one_witness"]
    return w, 0


# --------------------------------------------------------------------------

def ordered_axioms_check(inv: OrderedInvariant, samples) -> dict:
    """Closure, antisymmetry and generation of the positive cone on ``samples``."""
    samples = [(list(v), k) for v, k in samples]
    pos = [x for x in samples if is_positive(inv, x)]
    closure = all(is_positive(inv, inv.combine([(1, x), (1, y)])) for x in pos for y in pos)
    anti = []
    for x in samples:
        neg = ([-a for a in x[0]], x[1])
        if is_positive(inv, x) and is_positive(inv, neg):
            anti.append(eventually_zero(inv, x[0]))
    generation = True
    for v, k in samples:
        c = max(0, -min(v)) + 1
        plus, minus = ([a + c for a in v], k), ([c] * len(v), k)
        generation &= is_positive(inv, plus) and is_positive(inv, minus)
    return {"samples": len(samples), "positive": len(pos), "closure": closure,
            "antisymmetry": all(anti), "generation": generation,
            "ok": closure and all(anti) and generation}


def well_defined_check(inv: OrderedInvariant, element) -> bool:
    v, k = element
    return mu(inv, (v, k)) == mu(inv, (inv.push(v), k + 1))


def kernel_check(inv: OrderedInvariant) -> list[bool]:
    """``mu(delta f_e) == 0`` for every elementary edge cochain."""
    D = inv.coboundary
    if D is None:
        return []
    out = []
    for e in range(len(D[0])):
        col = [row[e] for row in D]
        out.append(mu(inv, (col, 0)) == 0)
    return out


def ratio_invariance_check(inv: OrderedInvariant, x, y, grid=None) -> dict:
    """``a x - b y`` is positive exactly when ``b/a <= mu(x)/mu(y)``, over a grid of ``(a, b)``."""
    mx, my = mu(inv, x), mu(inv, y)
    if mx.sign() <= 0 or my.sign() <= 0:
        raise ValueError("ratio check needs mu(x) > 0 and mu(y) > 0")
    ratio = mx / my
    if grid is None:
        approx = float(ratio)
        grid = []
        for a in range(1, 5):
            b0 = int(approx * a)
            grid += [(a, b) for b in range(max(0, b0 - 1), b0 + 3)]
    rows, ok = [], True
    for a, b in grid:
        z = inv.combine([(a, x), (-b, y)])
        positive = is_positive(inv, z)
        below = ratio * a - b
        expect = below.sign() >= 0
        rows.append({"a": a, "b": b, "positive": positive, "b_over_a_le_ratio": expect})
        ok &= positive == expect
    return {"ratio": ratio.to_json(), "ratio_approx": float(ratio), "grid": rows, "ok": ok}
