import pytest

from tilecoh.complex_builder import (ComplexError, collar, collared_coronas, corona_counts, enumerate_coronas,
                                     forces_border, gauge_equivalent, orientation_group, sigma_complex,
                                     vertex_orbit_structure)
from tilecoh.exact_algebra import GroupRingElement
from tilecoh.exact_algebra.linalg import matmul
from tilecoh.rule_format import fixture
from tilecoh.tiling_model import split_edges
from conftest import FINITE_G, built


def _split(name):
    return split_edges(fixture(name))


# --------------------------------------------------------------------------
# orientation groups and coronas

@pytest.mark.parametrize("name,kind,order", [("chair", "finite", 4), ("penrose_triangles", "finite", 10),
                                             ("square", "finite", 1), ("pinwheel", "infinite", None),
                                             ("pinwheel_2_3", "infinite", None)])
def test_orientation_group(name, kind, order):
    G = orientation_group(_split(name))
    assert (G.kind, G.order) == (kind, order)


def test_pinwheel_generator_is_not_a_root_of_unity():
    G = orientation_group(_split("pinwheel"))
    assert None in G.generator_orders


def test_chair_coronas():
    s = _split("chair")
    counts = corona_counts(s, enumerate_coronas(s), orientation_group(s))
    assert counts["up_to_rotation"] == 14
    assert counts["up_to_rotation_and_reflection"] == 9
    assert counts["per_orientation"] == 56


def test_corona_counts_other_fixtures():
    assert enumerate_coronas(_split("square")).count() == 1
    pen = enumerate_coronas(_split("penrose_triangles"))
    assert pen.count() == 30
    assert {t: len(v) for t, v in pen.by_type.items()} == {"acute": 5, "acute_m": 5, "obtuse": 10, "obtuse_m": 10}
    assert enumerate_coronas(_split("pinwheel")).count() >= 50


def test_collared_chair():
    s = _split("chair")
    col = collar(s)
    assert len(col.types) == 14
    assert set(col.base_type.values()) == {"L"}
    assert forces_border(col.system, coronas=collared_coronas(col), base_type=col.base_type).level == 1


def test_border_forcing_base_systems():
    assert forces_border(_split("square")).level == 1
    assert forces_border(_split("penrose_triangles")).level == 3
    assert not forces_border(_split("chair"), n_max=2).forced


def test_collared_corona_fast_path_matches_generic_closure():
    s = _split("chair")
    col = collar(s)
    fast = collared_coronas(col)
    slow = enumerate_coronas(col.system)
    assert fast.count() == slow.count() == 51


# --------------------------------------------------------------------------
# complexes

@pytest.mark.parametrize("name", FINITE_G + ["penrose_combinatorial"])
@pytest.mark.parametrize("variant", ["x", "0"])
@pytest.mark.parametrize("collared", [False, True])
def test_chain_identities(name, variant, collared):
    cx = built(name, variant, collared)
    assert cx.check() == {"d1d2_zero": True, "chain_map_2": True, "chain_map_1": True, "ok": True}


@pytest.mark.parametrize("name", ["pinwheel", "pinwheel_2_3"])
def test_chain_identities_infinite_group(name):
    assert built(name, "0", False).check()["ok"]


def test_pinwheel_collared_chain_identities():
    cx = built("pinwheel", "0", True)
    assert len(cx.faces) == 108
    assert cx.check()["ok"]


@pytest.mark.parametrize("name", ["pinwheel", "pinwheel_2_3"])
def test_sigma_x_needs_finite_group(name):
    with pytest.raises(ComplexError):
        sigma_complex(fixture(name), "x", collared=False)


def test_chair_uncollared_sigma_x():
    cx = built("chair", "x", False)
    assert cx.N == 4
    # p2 = 2 + t + t^3 and d2 = -1 + t - t^2 + t^3 with the chosen base orientation
    assert cx.subst[2] == [[GroupRingElement([2, 1, 0, 1])]]
    assert cx.boundary[2] == [[GroupRingElement([-1, 1, -1, 1])]]
    assert cx.subst[2][0][0].augmentation() == 4


def test_penrose_geometric_is_gauge_equivalent_to_hand_complex():
    A = built("penrose_triangles", "x", False)
    B = built("penrose_combinatorial", "x")
    assert gauge_equivalent(A, B) is not None
    assert gauge_equivalent(B, A) is not None


def test_gauge_detects_a_different_complex():
    assert gauge_equivalent(built("chair", "x", False), built("penrose_combinatorial", "x")) is None


def test_penrose_vertex_orbits():
    vs = vertex_orbit_structure(built("penrose_triangles", "x", False))["vertices"]
    assert [(o, s) for _, o, s, _ in vs] == [(2, 1), (2, 1)]
    assert {v[3] for v in vs} == {"Z[t]/(t^2 - 1)"}


def test_hand_complex_derives_vertex_map():
    cx = built("penrose_combinatorial", "x")
    assert "phi0" in cx.notes


@pytest.mark.parametrize("name", ["chair", "penrose_triangles"])
@pytest.mark.parametrize("collared", [False, True])
def test_sigma_0_is_sigma_x_at_t_equal_1(name, collared):
    x, z = built(name, "x", collared), built(name, "0", collared)
    assert [c.name for c in x.faces] == [c.name for c in z.faces]
    for k in (1, 2):
        assert [[e.augmentation() for e in r] for r in x.boundary[k]] == z.z_boundary(k)
    for k in (0, 1, 2):
        assert [[e.augmentation() for e in r] for r in x.subst[k]] == z.z_subst(k)


@pytest.mark.parametrize("name", FINITE_G + ["pinwheel"])
def test_face_substitution_at_t_1_is_count_matrix(name):
    cx = built(name, "0", False)
    assert cx.face_count_matrix() == _split(name).count_matrix()


def test_collared_face_counts_project_to_base():
    s = _split("chair")
    col = collar(s)
    cx = built("chair", "0", True)
    M = cx.face_count_matrix()
    # summing child counts over collared types recovers four children per chair
    assert all(sum(M[i][j] for i in range(len(M))) == 4 for j in range(len(M)))
    assert [c.name for c in cx.faces] == col.types


def test_expanded_boundary_squares_to_zero_over_z():
    cx = built("penrose_combinatorial", "x")
    d1, d2 = cx.z_boundary(1), cx.z_boundary(2)
    assert len(d2) == cx.rank(1) == 40 and len(d2[0]) == cx.rank(2) == 40
    assert all(not v for row in matmul(d1, d2) for v in row)
