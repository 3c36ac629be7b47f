import random

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from tilecoh.order_invariant import (DISTINGUISHED, NOT_DISTINGUISHED, compare_invariants, eventually_zero,
                                     is_positive, kernel_check, mu, mu_image, one_in_image,
                                     ordered_axioms_check, positivity_oracle, ratio_invariance_check,
                                     well_defined_check)
from conftest import invariant


@pytest.fixture(scope="module")
def chair():
    return invariant("chair", "0", False)


@pytest.fixture(scope="module")
def penrose():
    return invariant("penrose_combinatorial", "0")


def test_chair_mu_values(chair):
    assert chair.n == 1 and chair.is_integer
    assert mu(chair, ([3], 1)) == mpq(3, 4)
    assert mu(chair, ([1], 0)) == 1
    assert mu(chair, ([5], 2)) == mpq(5, 16)


def test_mu_rejects_bad_input(chair):
    with pytest.raises(ValueError):
        mu(chair, ([1, 2], 0))
    with pytest.raises(ValueError):
        mu(chair, ([1], -1))


def test_chair_image(chair):
    img = mu_image(chair)
    assert (img["kind"], img["lambda"], img["primes"], img["ring"]) == ("integer", 4, [2], "Z[1/4]")


def test_penrose_image(penrose):
    img = mu_image(penrose)
    assert img["kind"] == "field"
    assert img["field"] == "Q(sqrt(5))"
    assert img["min_poly_coeffs"] == [1, -3, 1]
    assert abs(img["lambda_approx"] - 2.618033988749895) < 1e-12
    assert one_in_image(penrose) is None


@pytest.mark.parametrize("name,collared", [("chair", True), ("square", True), ("chair", False)])
def test_one_in_image(name, collared):
    inv = invariant(name, "0", collared)
    x = one_in_image(inv)
    assert mu(inv, x) == 1


def test_positivity_examples(penrose):
    assert is_positive(penrose, ([1, 1, 1, 1], 0))
    assert not is_positive(penrose, ([-1, -1, -1, -1], 0))
    assert is_positive(penrose, ([0, 0, 0, 0], 3))
    # one face dual becomes strictly positive after a few substitutions
    m = positivity_oracle(penrose, [1, 0, 0, 0])
    assert m is not None and 1 <= m <= 4
    assert is_positive(penrose, ([1, 0, 0, 0], 0))
    # tau^2 > 2.6 and tau^2 < 2.7 seen through classes at consecutive levels
    assert is_positive(penrose, penrose.combine([(10, ([1, 1, 1, 1], 0)), (-26, ([1, 1, 1, 1], 1))]))
    assert not is_positive(penrose, penrose.combine([(10, ([1, 1, 1, 1], 0)), (-27, ([1, 1, 1, 1], 1))]))


def test_coboundaries_have_mu_zero(penrose):
    assert kernel_check(penrose) and all(kernel_check(penrose))


def test_mu_zero_class_is_logged():
    inv = invariant("penrose_triangles", "0", True)
    col = [row[0] for row in inv.coboundary]
    assert mu(inv, (col, 0)) == 0
    if not eventually_zero(inv, col):
        before = len(inv.kernel_log)
        assert not is_positive(inv, (col, 0))
        assert len(inv.kernel_log) == before + 1


def test_chair_axioms(chair):
    samples = [([a], k) for a in (-3, -1, 1, 3) for k in range(3)]
    res = ordered_axioms_check(chair, samples)
    assert res["ok"] and res["positive"] == 6


def test_ratio_chair(chair):
    res = ratio_invariance_check(chair, ([4], 0), ([1], 0), grid=[(1, 3), (1, 4), (1, 5)])
    assert [r["positive"] for r in res["grid"]] == [True, True, False]
    assert res["ok"] and res["ratio_approx"] == 4.0


def test_ratio_of_equal_elements(penrose):
    res = ratio_invariance_check(penrose, ([1, 2, 0, 1], 0), ([1, 2, 0, 1], 0))
    assert res["ok"] and res["ratio_approx"] == 1.0


def test_ratio_across_levels_is_lambda(penrose):
    v = [2, 1, 1, 3]
    res = ratio_invariance_check(penrose, (v, 0), (v, 1))
    assert res["ok"]
    assert mu(penrose, (v, 0)) / mu(penrose, (v, 1)) == penrose.lam.element()


def test_ratio_needs_positive_mu(chair):
    with pytest.raises(ValueError):
        ratio_invariance_check(chair, ([-1], 0), ([1], 0))


# --------------------------------------------------------------------------
# comparator

def test_compare_same_primes():
    v = compare_invariants(invariant("chair", "0", False), invariant("square", "0", False))
    assert v.outcome == NOT_DISTINGUISHED and "{2}" in v.reason and v.inconclusive


def test_compare_distinct_primes():
    v = compare_invariants(invariant("chair", "0", True), invariant("pinwheel", "0", True))
    assert v.outcome == DISTINGUISHED and v.reason == "prime sets {2} ≠ {5}"


def test_compare_integer_vs_irrational(penrose, chair):
    v = compare_invariants(penrose, chair)
    assert v.outcome == DISTINGUISHED and "integer on side B" in v.reason
    assert compare_invariants(chair, penrose).outcome == DISTINGUISHED


def test_compare_same_field(penrose):
    v = compare_invariants(penrose, invariant("penrose_triangles", "0", True))
    assert v.outcome == NOT_DISTINGUISHED
    assert v.reason == "same field Q(sqrt(5)): invariant agrees, inconclusive"


PAIRS = ["chair", "square", "penrose_combinatorial"]


@pytest.mark.parametrize("a", PAIRS)
@pytest.mark.parametrize("b", PAIRS)
def test_compare_symmetric_and_reflexive(a, b):
    A, B = invariant(a, "0", False), invariant(b, "0", False)
    assert compare_invariants(A, B).outcome == compare_invariants(B, A).outcome
    if a == b:
        assert compare_invariants(A, A).outcome == NOT_DISTINGUISHED


# --------------------------------------------------------------------------
# properties on seeded random cochains

FIXTURES = [("chair", True), ("square", True), ("penrose_combinatorial", False), ("penrose_triangles", True),
            ("pinwheel", True)]


def _samples(inv, count=100, seed=7):
    rng = random.Random(seed)
    return [([rng.randint(-5, 5) for _ in range(inv.n)], rng.randint(0, 3)) for _ in range(count)]


@pytest.mark.parametrize("name,collared", FIXTURES)
def test_mu_is_well_defined_on_the_limit(name, collared):
    inv = invariant(name, "0", collared)
    assert all(well_defined_check(inv, x) for x in _samples(inv))


@pytest.mark.parametrize("name,collared", FIXTURES)
def test_mu_kills_coboundaries(name, collared):
    inv = invariant(name, "0", collared)
    assert all(kernel_check(inv))
    rng = random.Random(11)
    D = inv.coboundary
    for _ in range(100):
        f = [rng.randint(-4, 4) for _ in range(len(D[0]))]
        df = [sum(a * b for a, b in zip(row, f)) for row in D]
        assert mu(inv, (df, rng.randint(0, 2))) == 0


@pytest.mark.parametrize("name,collared", FIXTURES)
def test_positive_cone_axioms(name, collared):
    inv = invariant(name, "0", collared)
    res = ordered_axioms_check(inv, _samples(inv, 100, seed=3)[:100])
    assert res["ok"], res


@pytest.mark.parametrize("name,collared", FIXTURES)
def test_sign_of_mu_agrees_with_oracle(name, collared):
    inv = invariant(name, "0", collared)
    for v, k in _samples(inv, 100, seed=5):
        s = mu(inv, (v, k)).sign()
        if s > 0:
            assert positivity_oracle(inv, v) is not None
        elif s < 0:
            assert positivity_oracle(inv, [-a for a in v]) is not None


cochain4 = st.lists(st.integers(-6, 6), min_size=4, max_size=4)


@given(cochain4, cochain4, st.integers(0, 3), st.integers(0, 3))
def test_penrose_mu_is_additive_and_monotone(v, w, j, k):
    inv = invariant("penrose_combinatorial", "0")
    x, y = (v, j), (w, k)
    s = inv.combine([(1, x), (1, y)])
    assert mu(inv, s) == mu(inv, x) + mu(inv, y)
    if is_positive(inv, x) and is_positive(inv, y):
        assert is_positive(inv, s)
    neg = ([-a for a in v], j)
    if mu(inv, x) != 0 or eventually_zero(inv, v):
        assert is_positive(inv, x) or is_positive(inv, neg)
    else:
        # nonzero mu-kernel elements are neither positive nor negative
        assert not is_positive(inv, x) and not is_positive(inv, neg)
