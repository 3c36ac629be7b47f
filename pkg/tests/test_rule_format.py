import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilecoh.exact_algebra import GroupRingElement
from tilecoh.rule_format import (CombinatorialComplexSpec, RuleFormatError, fixture, fixture_names, fixture_path,
                                 load, parse_system, serialize_system, systems_equal)
from tilecoh.rule_format import builders


def gr(terms, N=10):
    """Group ring element from ``{exponent: coefficient}``."""
    c = [0] * N
    for k, v in terms.items():
        c[k % N] += v
    return GroupRingElement(c)


def t(k, c=1):
    return gr({k: c})


ONE, ZERO = t(0), gr({})

# Penrose boundary and substitution matrices, transcribed by hand
D1 = [[gr({0: 1, 1: -1}), t(0, -1), t(1, -1), t(0, -1)],
      [ZERO, ONE, ONE, t(1)]]
D2 = [[t(0, -1), t(1), t(4), t(7, -1)],
      [t(0, -1), t(9), t(1, -1), t(8)],
      [ONE, t(5, -1), ZERO, ZERO],
      [ZERO, ZERO, ONE, t(5, -1)]]
P2 = [[t(7), ZERO, ZERO, t(4)],
      [ZERO, t(3), t(6), ZERO],
      [t(3), ZERO, t(4), ONE],
      [ZERO, t(7), ONE, t(6)]]
P1 = [[ZERO, ZERO, ZERO, t(8)],
      [t(4), ZERO, t(7, -1), ZERO],
      [t(7, -1), ZERO, ZERO, ZERO],
      [ZERO, t(3, -1), ZERO, t(5, -1)]]


def test_penrose_matrices_verbatim():
    spec = fixture("penrose_combinatorial")
    assert isinstance(spec, CombinatorialComplexSpec)
    assert spec.group_order == 10
    assert spec.boundary[1] == D1
    assert spec.boundary[2] == D2
    assert spec.substitution[2] == P2
    assert spec.substitution[1] == P1


def test_penrose_cells():
    spec = fixture("penrose_combinatorial")
    assert [f[0] for f in spec.faces] == ["f1", "f2", "f3", "f4"]
    assert [v[1] for v in spec.vertices] == [2, 2]


@pytest.mark.parametrize("name", fixture_names())
def test_round_trip(name):
    sys_ = fixture(name)
    data = serialize_system(sys_)
    again = parse_system(data)
    assert systems_equal(sys_, again)
    assert serialize_system(again) == data


@pytest.mark.parametrize("name", ["chair", "penrose_triangles", "pinwheel", "square"])
def test_fixture_matches_builder(name):
    assert systems_equal(fixture(name), getattr(builders, name)())


def test_load_accepts_fixture_name_and_path(tmp_path):
    p = tmp_path / "x.tsys.json"
    p.write_bytes(fixture_path("chair").read_bytes())
    assert systems_equal(load(p), load("chair"))


def _doc(name="chair"):
    return json.loads(fixture_path(name).read_text())


def _err(doc):
    with pytest.raises(RuleFormatError) as ei:
        parse_system(json.dumps(doc))
    return ei.value


def test_error_not_json():
    with pytest.raises(RuleFormatError, match="invalid JSON"):
        parse_system("{")
    with pytest.raises(RuleFormatError, match="UTF-8"):
        parse_system(b"\xff\xfe")


def test_error_schema_path():
    d = _doc()
    d["prototiles"][0]["vertices"][1] = [["x"], [0]]
    assert _err(d).path.startswith("$.prototiles[0].vertices[1]")


def test_error_unknown_child():
    d = _doc()
    d["substitution"]["placements"]["L"][0]["child"] = "Q"
    e = _err(d)
    assert "unknown child" in str(e) and e.path.endswith(".child")


def test_error_clockwise_polygon():
    d = _doc("square")
    d["prototiles"][0]["vertices"].reverse()
    assert "counterclockwise" in str(_err(d))


def test_error_non_unit_rotation():
    d = _doc("square")
    d["substitution"]["placements"]["S"][0]["rotation"] = [[2], [0]]
    assert "unit" in str(_err(d))


def test_error_wrong_coefficient_length():
    d = _doc("penrose_triangles")
    d["substitution"]["linear_factor"] = [1]
    assert "field degree" in str(_err(d))


def test_error_mixed_blocks():
    d = _doc("square")
    d["combinatorial"] = _doc("penrose_combinatorial")["combinatorial"]
    assert "mutually exclusive" in str(_err(d))


def test_error_bad_orbit_and_entry_length():
    d = _doc("penrose_combinatorial")
    d["combinatorial"]["cells"]["faces"][0]["orbit"] = 3
    assert "divide" in str(_err(d))
    d = _doc("penrose_combinatorial")
    d["combinatorial"]["boundary_matrices"]["2"][0][0] = [1]
    assert "coefficients" in str(_err(d))


def test_error_unknown_key():
    d = _doc("square")
    d["extra"] = 1
    _err(d)


json_values = st.recursive(
    st.none() | st.booleans() | st.integers() | st.text(max_size=5),
    lambda kids: st.lists(kids, max_size=4) | st.dictionaries(st.text(max_size=8), kids, max_size=4),
    max_leaves=20)


@given(json_values)
def test_fuzz_arbitrary_json_only_raises_rule_format_error(v):
    try:
        parse_system(json.dumps(v))
    except RuleFormatError:
        pass


@given(st.binary(max_size=64))
def test_fuzz_bytes_only_raises_rule_format_error(b):
    try:
        parse_system(b)
    except RuleFormatError:
        pass


@given(st.sampled_from(["name", "field", "prototiles", "substitution"]), json_values)
def test_fuzz_corrupted_field_only_raises_rule_format_error(key, v):
    d = _doc("square")
    d[key] = v
    try:
        parse_system(json.dumps(d))
    except RuleFormatError:
        pass
