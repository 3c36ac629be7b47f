import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilecoh.cohomology import (FINITE_INDEX_CAVEAT, cohomology_groups, direct_limit, h2_limit_group,
                                induced_map, limit_cohomology, representation_table,
                                top_cohomology_all_orientation)
from tilecoh.exact_algebra.linalg import matmul
from conftest import FINITE_G, cochains


@pytest.fixture(scope="module")
def penrose():
    return limit_cohomology(cochains("penrose_combinatorial", "x"))


def test_penrose_integral_ranks(penrose):
    assert penrose.free_rank == [1, 5, 8]
    assert penrose.torsion == [[], [], []]
    assert [penrose.group(k) for k in range(3)] == ["Z", "Z^5", "Z^8"]


def test_penrose_representation_table(penrose):
    rows = [(r.d, list(r.dims), r.rank_delta0, r.rank_delta1, r.h) for r in penrose.representations]
    assert rows == [(1, [2, 4, 4], 1, 2, (1, 1, 2)),
                    (2, [2, 4, 4], 2, 2, (0, 0, 2)),
                    (5, [0, 4, 4], 0, 4, (0, 0, 0)),
                    (10, [0, 4, 4], 0, 3, (0, 1, 1))]


def test_penrose_decomposition(penrose):
    assert penrose.decomposition == [
        "Z[t]/(t-1)",
        "Z[t]/(t-1) ⊕ Z[t]/(t^4-t^3+t^2-t+1)",
        "(Z[t]/(t-1))^2 ⊕ (Z[t]/(t+1))^2 ⊕ Z[t]/(t^4-t^3+t^2-t+1)",
    ]
    assert FINITE_INDEX_CAVEAT in penrose.caveats


def test_penrose_limit_is_the_approximant(penrose):
    assert penrose.branch == "isomorphism"
    assert penrose.extra["limit_equals_approximant"]
    assert all(penrose.extra["pullback_invertible"].values())


def test_single_representation():
    rep = cohomology_groups(cochains("penrose_combinatorial", "x"), 10)
    assert [r.d for r in rep.representations] == [10]
    with pytest.raises(ValueError):
        cohomology_groups(cochains("penrose_combinatorial", "x"), 3)


@pytest.mark.parametrize("name,collared", [("penrose_combinatorial", True), ("penrose_triangles", False),
                                           ("penrose_triangles", True)])
def test_penrose_quotient_ranks(name, collared):
    rep = limit_cohomology(cochains(name, "0", collared))
    assert rep.extra.get("limit_free_rank", rep.free_rank) == [1, 1, 2]


def test_penrose_all_orientation_top_degree():
    h3 = top_cohomology_all_orientation(limit_cohomology(cochains("penrose_combinatorial", "0")))
    assert (h3["degree"], h3["free_rank"], h3["group"]) == (3, 2, "Z^2")
    with pytest.raises(ValueError):
        top_cohomology_all_orientation(limit_cohomology(cochains("penrose_combinatorial", "x")))


# the trivial representation of Sigma_x sees exactly the rational cohomology of Sigma_0
@pytest.mark.parametrize("name", FINITE_G + ["penrose_combinatorial"])
def test_trivial_representation_matches_quotient(name):
    collared = name != "penrose_combinatorial"
    rows = representation_table(cochains(name, "x", collared))
    trivial = next(r for r in rows if r.d == 1)
    assert list(trivial.h) == cohomology_groups(cochains(name, "0", collared)).free_rank


@pytest.mark.parametrize("name", FINITE_G)
def test_representation_ranks_add_up(name):
    cc = cochains(name, "x", True)
    rep = cohomology_groups(cc)
    for k in range(3):
        assert sum((len(r.phi) - 1) * r.h[k] for r in rep.representations) == rep.free_rank[k]


@pytest.mark.parametrize("name", FINITE_G + ["pinwheel"])
def test_pullback_is_a_cochain_map(name):
    cc = cochains(name, "0", True)
    for k in (0, 1):
        assert matmul(cc.z_pullback(k + 1), cc.z_delta(k)) == matmul(cc.z_delta(k), cc.z_pullback(k))
    assert all(not x for r in matmul(cc.z_delta(1), cc.z_delta(0)) for x in r)


def test_chair_limit():
    rep = limit_cohomology(cochains("chair", "0", True))
    assert rep.free_rank == [1, 1, 3]
    assert rep.branch == "direct_limit"
    assert rep.extra["limit_free_rank"] == [1, 0, 1]


def test_square_is_a_localization():
    cc = cochains("square", "0", True)
    rep = limit_cohomology(cc)
    assert rep.free_rank == [1, 2, 1]
    assert rep.branch == "isomorphism"
    assert rep.extra["induced_determinant"] == {0: 1, 1: 4, 2: 4}
    assert not rep.extra["limit_equals_approximant"]
    # H^2 = lim (Z, x4) = Z[1/4]
    g = h2_limit_group(cc)
    assert (g.n, g.M, g.rank) == (1, [[4]], 1)
    A, _ = induced_map(cc, 2)
    assert A == [[4]]


def test_pinwheel_limit():
    rep = limit_cohomology(cochains("pinwheel", "0", True))
    assert rep.free_rank == [1, 1, 13]
    assert rep.torsion[2] == [2]
    assert rep.extra["limit_free_rank"] == [1, 1, 8]


# --------------------------------------------------------------------------
# direct limits of free groups

def test_direct_limit_of_doubling():
    g = direct_limit(1, [[2]])
    assert g.rank == 1 and g.stable_kernel_exponent == 0
    assert g.element([1], 0) == g.element([2], 1)
    assert g.element([1], 1) != g.element([1], 0)
    assert not g.element([1]).is_zero()


def test_direct_limit_of_zero_map():
    g = direct_limit(1, [[0]])
    assert g.rank == 0
    assert g.element([7], 3).is_zero()
    assert g.element([1], 0) == g.element([5], 2)


def test_direct_limit_nilpotent():
    g = direct_limit(2, [[0, 1], [0, 0]])
    assert g.stable_kernel_exponent == 2 and g.rank == 0
    assert g.eventually_zero([3, 4])


def test_direct_limit_shape_checked():
    with pytest.raises(ValueError):
        direct_limit(2, [[1]])


mats = st.lists(st.integers(-3, 3), min_size=4, max_size=4).map(lambda e: [e[:2], e[2:]])
vecs = st.lists(st.integers(-9, 9), min_size=2, max_size=2)


@given(mats, vecs, vecs, st.integers(0, 3), st.integers(0, 3))
def test_direct_limit_congruence(M, v, w, j, k):
    g = direct_limit(2, M)
    x = g.element(v, k)
    assert x == g.element(g.push(v, j), k + j)
    y = g.element(w, j)
    assert (x + y) - y == x
    assert (x - x).is_zero()
