import json

import pytest
from hypothesis import given, strategies as st

from kummer import CurveSpec, genus, parse_curve, ramification, render
from kummer.curve import load_spec, spec_from_mapping, spec_to_mapping
from kummer.errors import (
    CharacteristicError,
    CurveSyntaxError,
    DegreeError,
    DuplicateLabelError,
    EmptyCurveError,
    KummerError,
    MultiplicityRangeError,
    PlaceIndexError,
    PowerError,
)
from kummer.oracle import oracle_genus

from .conftest import curve_specs


def test_valid_hyperelliptic():
    spec = CurveSpec(2, (1,) * 5)
    assert spec.r == 5
    assert spec.lambdas == (0, 1, 1, 1, 1, 1, -5)


@pytest.mark.parametrize("kwargs, error", [
    (dict(m=4, mults=(1, 1), p=2), CharacteristicError),
    (dict(m=4, mults=(2, 2)), PowerError),
    (dict(m=1, mults=(1,)), DegreeError),
    (dict(m=5, mults=(1,), p=4), CharacteristicError),
    (dict(m=5, mults=(0, 1)), MultiplicityRangeError),
    (dict(m=5, mults=(5, 1)), MultiplicityRangeError),
    (dict(m=5, mults=()), EmptyCurveError),
    (dict(m=5, mults=(1, 2), labels=("a", "a")), DuplicateLabelError),
])
def test_validation_errors(kwargs, error):
    with pytest.raises(error):
        CurveSpec(**kwargs)


@pytest.mark.parametrize("m, mults, u, d, e", [
    (2, (1,) * 6, 7, 2, 1),
    (5, (1,) * 5, 1, 1, 5),
    (4, (1, 1, 2), 3, 2, 2),
    (4, (1, 1, 2), 0, 4, 1),
    (5, (1,) * 5, 6, 5, 1),
])
def test_ramification(m, mults, u, d, e):
    b = ramification(CurveSpec(m, mults), u)
    assert (b.d, b.e) == (d, e)
    assert b.totally_ramified is (d == 1)
    assert b.d * b.e == m


def test_ramification_index_range():
    with pytest.raises(PlaceIndexError):
        ramification(CurveSpec(3, (1, 1)), 4)


@pytest.mark.parametrize("m, mults, g", [
    (2, (1,) * 5, 2),
    (5, (1,) * 5, 6),
    (4, (1, 1, 2), 1),
])
def test_genus_examples(m, mults, g):
    spec = CurveSpec(m, mults)
    assert genus(spec) == g
    assert oracle_genus(spec) == g


@given(curve_specs(), st.randoms())
def test_genus_permutation_invariant(spec, rnd):
    mults = list(spec.mults)
    rnd.shuffle(mults)
    assert CurveSpec(spec.m, mults).genus == spec.genus


@pytest.mark.parametrize("r", range(1, 16))
def test_hyperelliptic_genus(r):
    assert CurveSpec(2, (1,) * r).genus == (r - 1) // 2


@pytest.mark.parametrize("m", range(3, 13))
def test_smooth_plane_genus(m):
    for r in (m - 1, m):
        assert CurveSpec(m, (1,) * r).genus == (m - 1) * (m - 2) // 2


def test_parse_basic():
    spec = parse_curve("y^7 = x*(x-1)^2*(x+3)^4")
    assert spec.m == 7
    assert spec.mults == (1, 2, 4)
    assert spec.labels == ("0", "1", "-3")


def test_parse_duplicate():
    with pytest.raises(DuplicateLabelError):
        parse_curve("y^2 = (x-1)*(x-1)")


def test_parse_characteristic():
    with pytest.raises(CharacteristicError):
        parse_curve("char=3; y^3 = x*(x-1)")
    assert parse_curve("char=5; y^3 = x*(x-1)").p == 5


def test_parse_binomial():
    spec = parse_curve("y^5 = x^5 - 1")
    assert spec.mults == (1,) * 5
    assert len(set(spec.labels)) == 5
    spec = parse_curve("y^4 = (x^3+2)^3*(x-b)")
    assert spec.mults == (3, 3, 3, 1)
    assert spec.labels[-1] == "b"
    assert parse_curve("y^3 = x - 1").mults == (1,)


@pytest.mark.parametrize("text", [
    "char=5; y^3 = x^5 - 1",
    "char=3; y^2 = x^4 - 6",
    "y^2 = x^3 - a",
    "y^2 = x^3 - 0",
])
def test_parse_binomial_rejects(text):
    with pytest.raises(KummerError):
        parse_curve(text)


@pytest.mark.parametrize("text, pos", [
    ("y^4 = x*(x-1", 12),
    ("y^4 = x*(x-1))", 13),
    ("z^4 = x", 0),
    ("y^4 = x*$", 8),
    ("y^4 x", 4),
])
def test_parse_syntax_error_position(text, pos):
    with pytest.raises(CurveSyntaxError) as info:
        parse_curve(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


@given(curve_specs(), st.sampled_from([0, 7, 11]))
def test_render_roundtrip(spec, p):
    if p and spec.m % p == 0:
        p = 0
    spec = CurveSpec(spec.m, spec.mults, p)
    assert parse_curve(render(spec)) == spec


def test_render_roundtrip_parsed_labels():
    for text in ["y^7 = x*(x-1)^2*(x+3)^4", "y^5 = x^5 + 2", "char=3; y^4 = (x-a)*(x+b)^3"]:
        spec = parse_curve(text)
        assert parse_curve(render(spec)) == spec


def test_spec_files(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"m": 4, "char": 3, "multiplicities": [1, 1, 2]}))
    spec = load_spec(path)
    assert (spec.m, spec.p, spec.mults) == (4, 3, (1, 1, 2))
    path.write_text(json.dumps({"equation": "y^5 = x^5 - 1"}))
    assert load_spec(path).genus == 6
    assert spec_from_mapping(spec_to_mapping(spec)) == spec
    with pytest.raises(KummerError):
        spec_from_mapping({"m": 3})
    path.write_text("{not json")
    with pytest.raises(KummerError):
        load_spec(path)
    with pytest.raises(OSError):
        load_spec(tmp_path / "missing.json")
