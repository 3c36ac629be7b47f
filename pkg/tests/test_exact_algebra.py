import random
from itertools import combinations
from math import gcd

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from tilecoh.exact_algebra import (AlgebraicNumber, GroupRingElement, NotPrimitiveError, NumberField,
                                   cyclotomic_factors, determinant_int, field_equal, invariant_factors,
                                   is_primitive, is_root_of_unity, perron_data, rank, reduce_mod_factor,
                                   smith_normal_form)
from tilecoh.exact_algebra import poly
from tilecoh.exact_algebra.linalg import charpoly, matmul, nullspace
from tilecoh.exact_algebra.perron import unit_minimal_polynomial
from tilecoh.rule_format import fixture
from tilecoh.rule_format.builders import penrose_field

# Penrose face substitution matrix at t = 1 (row = child type, column = parent)
PENROSE_P2_T1 = [[1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1], [0, 1, 1, 1]]
FIBONACCI = [[1, 1], [1, 0]]


# --------------------------------------------------------------------------
# Smith normal form

def test_snf_hand_example():
    D, U, V = smith_normal_form([[2, 4], [6, 8]])
    assert D == [[2, 0], [0, 4]]
    assert matmul(matmul(U, [[2, 4], [6, 8]]), V) == D


def test_snf_identity_and_zero():
    assert smith_normal_form([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]
    assert smith_normal_form([[0, 0, 0], [0, 0, 0]])[0] == [[0, 0, 0], [0, 0, 0]]


def _determinantal_divisor_oracle(M):
    """Invariant factors from gcds of k x k minors (naive, small matrices only)."""
    m, n = len(M), len(M[0])
    prev, out = 1, []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, determinant_int([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _check_snf(M):
    D, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant_int(U)) == 1 and abs(determinant_int(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert nz == _determinantal_divisor_oracle(M)


def test_snf_200_random_matrices_against_divisor_oracle():
    rng = random.Random(20240611)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        _check_snf(M)


@given(st.lists(st.lists(st.integers(-30, 30), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_property(M):
    _check_snf(M)


def test_invariant_factors_match_rank():
    M = [[2, 4, 6], [1, 2, 3], [0, 0, 5]]
    f = invariant_factors(M)
    assert sum(1 for x in f if x) == rank(M) == 2


# --------------------------------------------------------------------------
# characteristic polynomial, primitivity

@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9))
def test_cayley_hamilton(entries):
    M = [entries[0:3], entries[3:6], entries[6:9]]
    cp = charpoly(M)
    acc = [[0] * 3 for _ in range(3)]
    P = [[int(i == j) for j in range(3)] for i in range(3)]
    for c in cp:
        acc = [[a + int(c) * p for a, p in zip(ra, rp)] for ra, rp in zip(acc, P)]
        P = matmul(P, M)
    assert acc == [[0] * 3] * 3


def test_is_primitive_examples():
    assert is_primitive([[4]])
    assert is_primitive(PENROSE_P2_T1)
    assert not is_primitive([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        is_primitive([[1, -1], [1, 1]])


# --------------------------------------------------------------------------
# Perron data

def test_perron_fibonacci():
    pd = perron_data(FIBONACCI)
    assert list(pd.lam.monic_min_poly()) == [-1, -1, 1]
    lam = pd.lam.element()
    # r proportional to (lam, 1)
    assert pd.r[0] * 1 == pd.r[1] * lam
    assert pd.normalization_case == "noninteger"


def test_perron_chair_integer_case():
    pd = perron_data([[4]])
    assert pd.lam.is_integer() and int(pd.lam.as_rational()) == 4
    assert pd.r_integers() == [1]


def test_perron_penrose_t1():
    pd = perron_data(PENROSE_P2_T1)
    assert [int(c) for c in pd.lam.monic_min_poly()] == [1, -3, 1]
    assert all(x.sign() > 0 for x in pd.r)


def test_perron_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        perron_data([[0, 1], [1, 0]])


def test_perron_integer_case_has_gcd_one():
    pd = perron_data([[2, 2], [2, 2]])
    r = pd.r_integers()
    assert gcd(*r) == 1 and r == [1, 1]


def _orthogonality(M):
    """``r . w = 0`` for every generalized eigenvector ``w`` of a non-Perron eigenvalue."""
    pd = perron_data(M)
    K, lam = pd.field, pd.lam.element()
    n = len(M)
    cp = [K(c) for c in charpoly(M)]
    # p(x) = charpoly / (x - lam): its kernel on M is the sum of non-Perron generalized eigenspaces
    q = [K.zero] * (len(cp) - 1)
    acc = K.zero
    for i in range(len(cp) - 1, 0, -1):
        acc = cp[i] + acc * lam
        q[i - 1] = acc
    A = [[K(int(x)) for x in row] for row in M]
    P = [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]
    S = [[K.zero] * n for _ in range(n)]
    for c in q:
        S = [[s + c * p for s, p in zip(rs, rp)] for rs, rp in zip(S, P)]
        P = matmul(P, A, K.zero)
    W = nullspace(S, K.zero, K.one)
    assert len(W) == n - 1
    for w in W:
        acc = K.zero
        for ri, wi in zip(pd.r, w):
            acc = acc + ri * wi
        assert acc == K.zero
    return len(W)


def test_eigenvector_orthogonality_fibonacci():
    assert _orthogonality(FIBONACCI) == 1


def test_eigenvector_orthogonality_penrose_t1():
    assert _orthogonality(PENROSE_P2_T1) == 3


# --------------------------------------------------------------------------
# cyclotomic factors, group ring, representations

def test_cyclotomic_factors():
    assert cyclotomic_factors(10) == [[-1, 1], [1, 1], [1, 1, 1, 1, 1], [1, -1, 1, -1, 1]]
    assert cyclotomic_factors(4) == [[-1, 1], [1, 1], [1, 0, 1]]
    assert cyclotomic_factors(1) == [[-1, 1]]


@pytest.mark.parametrize("N", [1, 2, 4, 6, 10, 12])
def test_cyclotomic_product(N):
    prod = [1]
    for f in cyclotomic_factors(N):
        prod = poly.mul(prod, f)
    assert [int(c) for c in prod] == [-1] + [0] * (N - 1) + [1]


gr = st.integers(1, 12).flatmap(
    lambda N: st.tuples(st.lists(st.integers(-4, 4), min_size=N, max_size=N),
                        st.lists(st.integers(-4, 4), min_size=N, max_size=N)))


@given(gr)
def test_involution_is_ring_automorphism(pair):
    a, b = GroupRingElement(pair[0]), GroupRingElement(pair[1])
    assert (a * b).involution() == a.involution() * b.involution()
    assert (a + b).involution() == a.involution() + b.involution()
    assert a.involution().involution() == a


@given(gr)
def test_augmentation_is_multiplicative(pair):
    a, b = GroupRingElement(pair[0]), GroupRingElement(pair[1])
    assert (a * b).augmentation() == a.augmentation() * b.augmentation()


def test_penrose_ranks_by_representation():
    spec = fixture("penrose_combinatorial")
    d2 = spec.boundary[2]
    star = [[d2[j][i].involution() for j in range(4)] for i in range(4)]
    ranks = [reduce_mod_factor(star, f)[1] for f in cyclotomic_factors(10)]
    assert ranks == [2, 2, 4, 3]


# --------------------------------------------------------------------------
# algebraic numbers

def test_root_of_unity_examples():
    K = penrose_field()
    theta = K.gen
    sqrt5 = (10 - theta * theta) / 2
    assert is_root_of_unity((1 + sqrt5) / 4, theta / 4) == 10
    Q5 = NumberField([1, 0, -5], ("2", "3"))
    s5 = Q5.gen
    c, s = 2 / s5, 1 / s5
    assert is_root_of_unity(c, s) is None
    # z^2 = (3+4i)/5 gives z^2 + z^-2 = 6/5
    assert unit_minimal_polynomial(c, s) == [5, 0, -6, 0, 5]
    Q = NumberField([1, -1], ("0", "2"))
    assert is_root_of_unity(Q(-1), Q(0)) == 2


def test_field_equal_examples():
    tau2 = AlgebraicNumber([1, -3, 1], ("2", "3"))
    sqrt5 = AlgebraicNumber([1, 0, -5], ("2", "3"))
    sqrt2 = AlgebraicNumber([1, 0, -2], ("1", "2"))
    sqrt3 = AlgebraicNumber([1, 0, -3], ("1", "2"))
    eq = field_equal(tau2, sqrt5)
    assert eq.equal
    # sqrt5 = 2 tau^2 - 3
    assert eq.b_in_a == 2 * tau2.element() - 3
    assert not field_equal(sqrt2, sqrt3)
    assert field_equal(tau2, tau2)
    with pytest.raises(ValueError):
        field_equal(AlgebraicNumber([1, -4], ("3", "5")), sqrt5)


@given(st.lists(st.builds(lambda a, b: mpq(a, b), st.integers(-200, 200), st.integers(1, 20)), min_size=4, max_size=4))
def test_field_arithmetic_round_trip(cs):
    K = NumberField([1, 0, -13], ("3", "4"))
    x, y = K([cs[0], cs[1]]), K([cs[2], cs[3]])
    if y:
        assert (x * y) / y == x
    assert x + y - y == x
    assert (x * y).sign() == (0 if not (x and y) else (1 if float(x) * float(y) > 0 else -1))


def test_sign_of_tiny_quantity():
    K = NumberField([1, 0, -2], ("1", "2"))
    r2 = K.gen
    # 99/70 is a convergent of sqrt 2, so the difference is about 7e-5
    assert (r2 - mpq(99, 70)).sign() == -1
    assert (r2 - mpq(140, 99)).sign() == 1
