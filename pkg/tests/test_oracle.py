import pytest
from hypothesis import given, settings

from kummer import CurveSpec, gap_set
from kummer.errors import UnsupportedError, UnsupportedPlaceError
from kummer.oracle import (
    differential_divisor,
    eigenspaces,
    oracle_gap_set,
    oracle_genus,
    vanishing_orders,
)
from kummer.sweeps import spec_grid

from .conftest import curve_specs


def test_differential_divisor_hyperelliptic(hyper6):
    W = differential_divisor(hyper6, 1)
    assert [W[u] for u in range(1, 7)] == [0] * 6
    assert W[7] == 1
    assert W.degree(hyper6) == 2 * hyper6.genus - 2


def test_differential_divisor_fermat(fermat5):
    W = differential_divisor(fermat5, 1)
    assert [W[u] for u in range(1, 6)] == [3] * 5
    assert W[6] == -1
    assert W.degree(fermat5) == 10


def test_differential_divisor_range(fermat5):
    with pytest.raises(ValueError):
        differential_divisor(fermat5, 0)
    with pytest.raises(ValueError):
        differential_divisor(fermat5, 5)


@given(curve_specs())
def test_canonical_degree_and_dimension(spec):
    g = spec.genus
    data = eigenspaces(spec)
    for es in data:
        assert es.W.degree(spec) == 2 * g - 2
        assert es.dim == max(0, es.E.degree() + 1)
    assert sum(es.dim for es in data) == g


def test_oracle_examples(hyper6, fermat5, elliptic):
    assert oracle_gap_set(hyper6, 1).gaps == (1, 3)
    assert vanishing_orders(hyper6, 1) == {1: [0, 2]}
    assert oracle_gap_set(fermat5, 1).gaps == (1, 2, 3, 6, 7, 11)
    assert oracle_gap_set(elliptic, 1).gaps == (1,)


def test_oracle_rejects(quartic):
    with pytest.raises(UnsupportedPlaceError):
        oracle_gap_set(quartic, 3)
    with pytest.raises(UnsupportedError):
        oracle_gap_set(CurveSpec(3, (1, 2)), 1)


@settings(max_examples=300)
@given(curve_specs(max_m=12, max_r=7))
def test_oracle_agrees_and_orders_are_disjoint(spec):
    if spec.genus < 1:
        return
    g = spec.genus
    for u in spec.totally_ramified():
        per_t = vanishing_orders(spec, u)
        flat = [o for os in per_t.values() for o in os]
        assert len(flat) == len(set(flat)) == g
        residues = []
        for os in per_t.values():
            # one eigenspace: a run with step m
            assert {o % spec.m for o in os} == {os[0] % spec.m}
            residues.append(os[0] % spec.m)
        assert len(residues) == len(set(residues))
        assert all(0 <= o <= 2 * g - 2 for o in flat)
        assert oracle_gap_set(spec, u) == gap_set(spec, u)


def test_genus_identity_exhaustive():
    # all degrees up to 12 with r <= 4, plus r up to 8 for m <= 7
    count = 0
    for spec in spec_grid(12, 4):
        assert oracle_genus(spec) == spec.genus
        count += 1
    for spec in spec_grid(7, 8, r_min=5):
        assert oracle_genus(spec) == spec.genus
        count += 1
    assert count > 5000
