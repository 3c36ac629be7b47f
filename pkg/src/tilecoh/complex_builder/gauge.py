"""Gauge equivalence of group-ring complexes.

Two presentations of the same complex differ by a choice of representative
cell in each orbit (a monomial ``t^a`` per cell), an edge orientation (a
sign per edge), the order of the cells and the generator of the rotation
group (a ring automorphism ``t -> t^u``).  :func:`gauge_equivalent` searches
those choices for one taking the first complex to the second.

With new bases ``F'_i = t^a_i F_sigma(i)``, ``E'_e = eps_e t^b_e E_pi(e)`` and
``V'_v = eta_v t^c_v V_kappa(v)`` the matrices transform as::

    d2'[e, i]   = eps_e t^(a_i - b_e) d2[pi e, sigma i]
    d1'[v, e]   = eta_v eps_e t^(b_e - c_v) d1[kappa v, pi e]
    phi2'[i, j] = t^(a_j - a_i) phi2[sigma i, sigma j]       (and alike in degrees 1, 0)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from ..exact_algebra.group_ring import GroupRingElement
from .complex import APComplex, Cell, reduce_entry


@dataclass
class Gauge:
    u: int
    faces: list  # sigma as list, plus shifts
    face_shifts: list
    edges: list
    edge_signs: list
    edge_shifts: list
    vertices: list
    vertex_signs: list
    vertex_shifts: list

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _mono(N, k, s=1) -> GroupRingElement:
    return GroupRingElement.monomial(N, k % N, s)


def _auto(cx: APComplex, u: int) -> APComplex:
    def m(M, rows):
        return [[reduce_entry(e.automorphism(u), rows[i]) for e in r] for i, r in enumerate(M)]

    return APComplex(cx.system, cx.variant, cx.N, cx.faces, cx.edges, cx.vertices,
                     {1: m(cx.boundary[1], cx.vertices), 2: m(cx.boundary[2], cx.edges)},
                     {k: m(v, cx.cells(k)) for k, v in cx.subst.items()}, cx.face_types, cx.notes)


def _eq(a: GroupRingElement, b: GroupRingElement, cell: Cell) -> bool:
    return reduce_entry(a, cell) == reduce_entry(b, cell)


def gauge_equivalent(A: APComplex, B: APComplex, check_phi0: bool = True) -> Gauge | None:
    """A gauge taking ``A`` to ``B``, or ``None`` if there is none."""
    N = A.N
    if N != B.N or [len(A.cells(d)) for d in range(3)] != [len(B.cells(d)) for d in range(3)]:
        return None
    if sorted(A.orbits(1)) != sorted(B.orbits(1)) or sorted(A.orbits(0)) != sorted(B.orbits(0)):
        return None
    nF = len(A.faces)
    for u in (u for u in range(1, N + 1) if math.gcd(u, N) == 1):
        Au = _auto(A, u) if u != 1 else A
        for sigma in permutations(range(nF)):
            for a in _face_shifts(Au, B, sigma, N):
                for pi, eps, b in _edge_gauges(Au, B, sigma, a, N):
                    if not _check_square(Au.subst.get(1), B.subst.get(1), pi, eps, b, B.edges, N):
                        continue
                    for kappa, eta, c in _vertex_gauges(Au, B, pi, eps, b, N):
                        if check_phi0 and 0 in B.subst and 0 in Au.subst:
                            if not _check_square(Au.subst[0], B.subst[0], kappa, eta, c, B.vertices, N):
                                continue
                        return Gauge(u, list(sigma), a, list(pi), eps, b, list(kappa), eta, c)
    return None


def _face_shifts(A, B, sigma, N):
    nF = len(sigma)
    P, Q = A.subst[2], B.subst[2]
    face = Cell("f", N, 1)

    def ok(i, j, a):
        return _eq(Q[i][j], P[sigma[i]][sigma[j]].shift(a[j] - a[i]), face)

    def rec(a):
        i = len(a)
        if i == nF:
            yield list(a)
            return
        for s in (range(1) if i == 0 else range(N)):
            a.append(s)
            if all(ok(i, j, a) and ok(j, i, a) for j in range(i + 1)):
                yield from rec(a)
            a.pop()

    yield from rec([])


def _edge_gauges(A, B, sigma, a, N):
    nE, nF = len(A.edges), len(sigma)
    D, T = A.boundary[2], B.boundary[2]
    options = []
    for e in range(nE):
        cell = B.edges[e]
        opts = []
        for r in range(nE):
            if (A.edges[r].orbit, A.edges[r].sign) != (cell.orbit, cell.sign):
                continue
            for s in (1, -1):
                for bb in range(cell.orbit if cell.sign == 1 else 2 * cell.orbit):
                    if all(_eq(T[e][i], D[r][sigma[i]].shift(a[i] - bb) * s, cell) for i in range(nF)):
                        opts.append((r, s, bb))
        if not opts:
            return
        options.append(opts)

    def rec(e, used, acc):
        if e == nE:
            pi = [x[0] for x in acc]
            yield pi, [x[1] for x in acc], [x[2] for x in acc]
            return
        for r, s, bb in options[e]:
            if r not in used:
                acc.append((r, s, bb))
                yield from rec(e + 1, used | {r}, acc)
                acc.pop()

    yield from rec(0, frozenset(), [])


def _check_square(P, Q, perm, sgn, sh, cells, N) -> bool:
    if P is None or Q is None:
        return True
    n = len(perm)
    for i in range(n):
        for j in range(n):
            want = P[perm[i]][perm[j]].shift(sh[j] - sh[i]) * (sgn[i] * sgn[j])
            if not _eq(Q[i][j], want, cells[i]):
                return False
    return True


def _vertex_gauges(A, B, pi, eps, b, N):
    nV, nE = len(A.vertices), len(pi)
    D, T = A.boundary[1], B.boundary[1]
    options = []
    for v in range(nV):
        cell = B.vertices[v]
        opts = []
        for r in range(nV):
            if (A.vertices[r].orbit, A.vertices[r].sign) != (cell.orbit, cell.sign):
                continue
            for s in (1, -1):
                for cc in range(cell.orbit):
                    if all(_eq(T[v][e], D[r][pi[e]].shift(b[e] - cc) * (s * eps[e]), cell) for e in range(nE)):
                        opts.append((r, s, cc))
        if not opts:
            return
        options.append(opts)

    def rec(v, used, acc):
        if v == nV:
            yield [x[0] for x in acc], [x[1] for x in acc], [x[2] for x in acc]
            return
        for r, s, cc in options[v]:
            if r not in used:
                acc.append((r, s, cc))
                yield from rec(v + 1, used | {r}, acc)
                acc.pop()

    yield from rec(0, frozenset(), [])
