"""Exact linear algebra: field elimination, Smith normal form, characteristic polynomials.

Matrices are lists of rows.  Field routines accept any element type
supporting ``+ - * /`` and truthiness as a zero test (``gmpy2.mpq``,
:class:`~tilecoh.exact_algebra.numbers.FieldElement`).
"""
from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq

Matrix = list


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], zero=0) -> Matrix:
    if not A:
        return []
    Bt = transpose(B)
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = zero
            for a, b in zip(row, col):
                if a and b:
                    acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(A: Sequence[Sequence], v: Sequence, zero=0) -> list:
    out = []
    for row in A:
        acc = zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def vecmat(v: Sequence, A: Sequence[Sequence], zero=0) -> list:
    if not A:
        return []
    return matvec(transpose(A), v, zero)


def matpow(A: Sequence[Sequence], k: int, one=1, zero=0) -> Matrix:
    n = len(A)
    result = identity(n, one, zero)
    base = [list(r) for r in A]
    while k:
        if k & 1:
            result = matmul(result, base, zero)
        base = matmul(base, base, zero)
        k >>= 1
    return result


def is_zero_matrix(A: Sequence[Sequence]) -> bool:
    return all(not x for row in A for x in row)


# --------------------------------------------------------------------------
# elimination over a field

def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = [list(r) for r in M]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv if x else x for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    """Rank over the field of the entries (fraction-free for integers)."""
    if not M or not M[0]:
        return 0
    if all(isinstance(x, int) for row in M for x in row):
        return _rank_int(M)
    A = [list(r) for r in M]
    rows, cols = shape(A)
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        for i in range(r + 1, rows):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def _rank_int(M) -> int:
    # Bareiss-style fraction-free elimination
    A = [list(r) for r in M]
    rows, cols = shape(A)
    r = 0
    prev = 1
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, rows):
            a = A[i][c]
            if a:
                A[i] = [(piv * x - a * y) // prev for x, y in zip(A[i], A[r])]
            else:
                A[i] = [(piv * x) // prev for x in A[i]]
        prev = piv
        r += 1
        if r == rows:
            break
    return r


def nullspace(M: Sequence[Sequence], zero, one) -> Matrix:
    """Basis of the right null space ``{x : M x = 0}``."""
    rows, cols = shape(M)
    if cols == 0:
        return []
    R, pivots = rref(M) if rows else ([], [])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for i, p in enumerate(pivots):
            if R[i][f]:
                v[p] = -R[i][f]
        basis.append(v)
    return basis


def left_nullspace(M: Sequence[Sequence], zero, one) -> Matrix:
    return nullspace(transpose(M), zero, one)


def solve_in_span(basis: Sequence[Sequence], v: Sequence, zero):
    """Coefficients expressing ``v`` in the row span of ``basis``, or ``None``."""
    if not basis:
        return [] if all(not x for x in v) else None
    k = len(basis)
    aug = [list(col) + [vi] for col, vi in zip(transpose(basis), v)]
    R, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [zero] * k
    for i, p in enumerate(pivots):
        coeffs[p] = R[i][k]
    return coeffs


# --------------------------------------------------------------------------
# integer matrices

def to_int_matrix(M) -> Matrix:
    return [[int(x) for x in row] for row in M]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``D = U M V`` over Z.

    Returns ``(D, U, V)`` with ``U`` and ``V`` unimodular and the nonzero
    diagonal entries of ``D`` positive with ``d1 | d2 | ...``.
    """
    A = to_int_matrix(M)
    m, n = len(A), (len(A[0]) if A else 0)
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        # pick the nonzero entry of least magnitude in the trailing block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        _swap_rows(A, U, t, i)
        _swap_cols(A, V, t, j)
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    _add_row(A, U, i, t, -q)
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    _add_col(A, V, j, t, -q)
                    if A[t][j]:
                        done = False
            if done:
                # divisibility against the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                _add_row(A, U, t, bad, 1)
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            _swap_rows(A, U, t, i)
            _swap_cols(A, V, t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def _swap_rows(A, U, i, j):
    if i != j:
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]


def _swap_cols(A, V, i, j):
    if i != j:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]


def _add_row(A, U, i, j, q):
    """row_i += q * row_j"""
    A[i] = [a + q * b for a, b in zip(A[i], A[j])]
    U[i] = [a + q * b for a, b in zip(U[i], U[j])]


def _add_col(A, V, i, j, q):
    """col_i += q * col_j"""
    for row in A:
        row[i] += q * row[j]
    for row in V:
        row[i] += q * row[j]


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(shape(D))) if D[i][i]]


def determinant_int(M: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant."""
    A = to_int_matrix(M)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def charpoly(M: Sequence[Sequence]) -> list:
    """Characteristic polynomial ``det(xI - M)`` (ascending, rational) via Hessenberg reduction."""
    n = len(M)
    H = [[mpq(x) for x in row] for row in M]
    for m in range(1, n - 1):
        p = next((i for i in range(m, n) if H[i][m - 1]), None)
        if p is None:
            continue
        if p != m:
            H[m], H[p] = H[p], H[m]
            for row in H:
                row[m], row[p] = row[p], row[m]
        piv = H[m][m - 1]
        for i in range(m + 1, n):
            if H[i][m - 1]:
                f = H[i][m - 1] / piv
                H[i] = [a - f * b for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] += f * row[i]
    # recurrence on leading principal submatrices
    polys = [[mpq(1)]]
    for k in range(1, n + 1):
        # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
        prev = polys[-1]
        pk = [mpq(0)] + list(prev)
        hkk = H[k - 1][k - 1]
        for idx, c in enumerate(prev):
            pk[idx] -= hkk * c
        prod = mpq(1)
        for i in range(k - 1, 0, -1):
            prod *= H[i][i - 1]
            if not prod:
                break
            coef = H[i - 1][k - 1] * prod
            if coef:
                for idx, c in enumerate(polys[i - 1]):
                    pk[idx] -= coef * c
        polys.append(pk)
    out = polys[-1]
    while out and out[-1] == 0:
        out.pop()
    return out
