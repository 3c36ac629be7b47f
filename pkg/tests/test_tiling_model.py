from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilecoh.exact_algebra.linalg import matmul
from tilecoh.rule_format import fixture
from tilecoh.rule_format.builders import penrose_field, square
from tilecoh.tiling_model import (Motion, Vec, area_vector, check_decomposition, rotational_symmetries,
                                  split_edges, supertile, validate_system)
from conftest import GEOMETRIC


def test_supertile_counts_per_level():
    assert len(supertile(fixture("chair"), "L", 1)) == 4
    assert len(supertile(fixture("pinwheel"), "T", 1)) == 5
    assert len(supertile(fixture("pinwheel_2_3"), "T", 1)) == 13
    for name in GEOMETRIC:
        s = fixture(name)
        assert all(len(supertile(s, t, 0)) == 1 for t in s.types)


def test_negative_level_rejected():
    with pytest.raises(ValueError):
        supertile(fixture("square"), "S", -1)


def test_prototile_areas():
    assert [str(a) for a in area_vector(fixture("chair"))] == ["3"]
    assert [str(a) for a in area_vector(fixture("square"))] == ["1"]
    assert [str(a) for a in area_vector(fixture("pinwheel"))] == ["(1)", "(1)"]


@pytest.mark.parametrize("name", GEOMETRIC)
def test_area_scales_by_c_squared(name):
    s = fixture(name)
    A = area_vector(s)
    c2 = s.c * s.c
    M = s.count_matrix()
    for j, t in enumerate(s.types):
        # children of T tile c*T, counted with multiplicity
        total = sum((A[i] * M[i][j] for i in range(len(A))), A[0] * 0)
        assert total == c2 * A[j]
        assert supertile(s, t, 1).area() == c2 * A[j]


@pytest.mark.parametrize("name", ["chair", "penrose_triangles", "pinwheel"])
def test_tile_counts_follow_matrix_powers(name):
    s = fixture(name)
    M = s.count_matrix()
    M2 = matmul(M, M)
    for j, t in enumerate(s.types):
        got = Counter(pt.type for pt in supertile(s, t, 2).tiles)
        assert [got.get(u, 0) for u in s.types] == [row[j] for row in M2]


def test_substitution_is_associative_in_levels():
    s = fixture("penrose_triangles")
    a = supertile(s, "acute", 1).substitute().substitute()
    b = supertile(s, "acute", 3)
    key = lambda pt: (pt.type, pt.motion.key())  # noqa: E731
    assert sorted(map(key, a.tiles)) == sorted(map(key, b.tiles))


K = penrose_field()
small = st.integers(-3, 3)


def _motion(a, b, c, d, refl):
    rots = [Vec.of(K, 1, 0), Vec.of(K, 0, 1), Vec.of(K, -1, 0), Vec.of(K, 0, -1)]
    return Motion(rots[a % 4], Vec.of(K, b, c), bool(refl)) if d else Motion(rots[a % 4], Vec.of(K, c, b), False)


motions = st.builds(_motion, st.integers(0, 3), small, small, st.booleans(), st.booleans())


@given(motions, motions, motions, small, small)
def test_motion_composition_is_associative(f, g, h, x, y):
    p = Vec.of(K, x, y)
    assert f.compose(g).compose(h) == f.compose(g.compose(h))
    assert f.compose(g).apply(p) == f.apply(g.apply(p))
    assert f.inverse().apply(f.apply(p)) == p


def test_validation_as_given():
    assert validate_system(fixture("penrose_triangles")).ok
    assert validate_system(fixture("square")).ok
    chair = validate_system(fixture("chair"))
    assert not chair.ok and not chair.result(2).passed
    assert chair.result(4).data["n_T"] == {"L": 1}


def test_penrose_parallel_copies():
    r = validate_system(fixture("penrose_triangles"))
    assert r.result(4).data["n_T"] == {"acute": 4, "acute_m": 4, "obtuse": 2, "obtuse_m": 2}
    assert r.result(3).data["k"] == 2


@pytest.mark.parametrize("name", ["chair", "pinwheel", "pinwheel_2_3"])
def test_edge_split_makes_rules_edge_to_edge(name):
    s = fixture(name)
    assert check_decomposition(s, s.types[0])
    sp = split_edges(s)
    assert validate_system(sp).ok
    assert all(check_decomposition(sp, t) == [] for t in sp.types)
    # splitting adds vertices but no area
    assert area_vector(sp) == area_vector(s)


def test_split_chair_has_eight_vertices():
    sp = split_edges(fixture("chair"))
    assert sp.tile("L").n == 8


def test_symmetric_square_is_flagged():
    sym = square(("a", "a", "a", "a"))
    assert len(rotational_symmetries(sym.tile("S"))) > 1
    assert not validate_system(sym).result(5).passed
    assert validate_system(square()).result(5).passed
