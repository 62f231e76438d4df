from __future__ import annotations

import json
from fractions import Fraction

import pytest

from yblattice.errors import RetryBudgetExhausted
from yblattice.exactnum import gamma_pair_from_slope
from yblattice.quadgraph import QuadSystem
from yblattice.verify import (
    CORRUPTIBLE,
    Property,
    TripleState,
    check_unitarity,
    check_yb_relation,
    sweep,
)
from yblattice.ybmaps import MapId, YBPoint

ALL_MAPS = (
    MapId.e1_shaded(),
    MapId.e1_blank(),
    MapId.e2(),
    MapId.e3(),
    MapId.e4(Fraction(7, 3)),
    MapId.e4_eps0_scaling(),
    MapId.e4_eps0_joint(),
    MapId.e5(),
    MapId.vnls(3),
)


def test_property_values_are_the_cli_names():
    assert {p.value for p in Property} == {
        "yb",
        "unitarity",
        "consistency-3d",
        "braid",
        "zero-curvature",
        "commuting-diagram",
        "functional-relations",
        "non-quadrirational",
    }


def test_triple_state_validates_shapes():
    a = YBPoint.of(Fraction(1), Fraction(2))
    vec = YBPoint((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))
    with pytest.raises(ValueError):
        TripleState(a, a, vec, Fraction(1), Fraction(2), Fraction(3))


def test_yb_relation_on_a_direct_triple():
    t = TripleState(
        YBPoint.of(Fraction(2), Fraction(1)),
        YBPoint.of(Fraction(3), Fraction(5)),
        YBPoint.of(Fraction(1), Fraction(4)),
        Fraction(1),
        Fraction(0),
        Fraction(1, 2),
    )
    assert check_yb_relation(MapId.e1_shaded(), t)
    assert not check_yb_relation(MapId.e1_shaded(), t, corrupt=True)


def test_unitarity_on_a_direct_pair():
    assert check_unitarity(
        MapId.e3(),
        YBPoint.of(Fraction(1), Fraction(4)),
        YBPoint.of(Fraction(2), Fraction(7)),
        Fraction(1),
        Fraction(0),
    )


@pytest.mark.parametrize("prop", sorted(CORRUPTIBLE, key=lambda p: p.value))
def test_corruptible_properties_have_working_fixtures(prop):
    target = MapId.e1_shaded()
    report = sweep(target, prop, n=10, corrupt=True)
    assert report.samples_valid > 0
    assert report.samples_passed == 0
    assert not report.all_passed()
    assert report.first_failure is not None


def test_report_accounting():
    report = sweep(MapId.e3(), Property.YB, seed=1, n=7)
    assert report.samples_requested == 7
    assert report.samples_valid + report.singular_skipped == 7
    assert report.samples_passed <= report.samples_valid
    payload = json.loads(report.to_json())
    assert list(payload) == ["map", "property", "requested", "valid", "passed", "skipped"]
    assert payload["map"] == "e3"
    assert payload["property"] == "yb"


def test_reports_are_reproducible():
    first = sweep(MapId.e5(), Property.UNITARITY, seed=6, n=25)
    second = sweep(MapId.e5(), Property.UNITARITY, seed=6, n=25)
    assert first.to_json() == second.to_json()


def test_first_failure_serializes_the_inputs():
    report = sweep(MapId.e2(), Property.YB, n=5, corrupt=True)
    payload = json.loads(report.to_json())
    assert "first_failure" in payload
    dump = payload["first_failure"]
    assert {"x", "y", "z", "beta1", "beta2", "beta3"} <= set(dump)
    # rationals serialize as canonical p/q strings
    assert all(isinstance(v, str) for v in dump["x"]["first"])


def test_zero_valid_samples_exhausts_the_budget():
    with pytest.raises(RetryBudgetExhausted):
        sweep(
            MapId.e1_shaded(),
            Property.UNITARITY,
            seed=4,
            n=1,
            bound=2,
            retry_budget=1,
        )


def test_target_and_property_mismatches():
    with pytest.raises(ValueError):
        sweep(QuadSystem.e1(), Property.YB, n=1)
    with pytest.raises(ValueError):
        sweep(MapId.e2(), Property.BRAID, n=1)
    with pytest.raises(ValueError):
        sweep(MapId.e2(), Property.ZERO_CURVATURE, n=1)
    with pytest.raises(ValueError):
        sweep(QuadSystem.e1(), Property.CONSISTENCY_3D, n=1, corrupt=True)
    with pytest.raises(ValueError):
        sweep(QuadSystem.e1(), Property.BRAID, n=1, first_param=Fraction(1))


def test_consistency_accepts_map_targets_through_their_parents():
    report = sweep(MapId.e1_blank(), Property.CONSISTENCY_3D, n=10)
    assert report.all_passed()
    assert report.map == "e1-blank"


def test_pinned_first_parameter_appears_in_every_sample():
    pinned = gamma_pair_from_slope(Fraction(3, 2), 1)
    report = sweep(MapId.e5(), Property.YB, n=10, first_param=pinned)
    assert report.all_passed()


@pytest.mark.parametrize("map_id", ALL_MAPS, ids=lambda m: m.label())
def test_all_map_properties_pass_small_sweeps(map_id):
    for prop in (
        Property.YB,
        Property.UNITARITY,
        Property.COMMUTING_DIAGRAM,
        Property.FUNCTIONAL_RELATIONS,
        Property.NON_QUADRIRATIONAL,
    ):
        if prop is Property.NON_QUADRIRATIONAL and map_id.block_size() != 1:
            continue
        report = sweep(map_id, prop, n=15)
        assert report.all_passed(), report.to_json()


def test_braid_sweep_covers_both_field_kinds():
    for system in (QuadSystem.e1(), QuadSystem.vnls(2)):
        report = sweep(system, Property.BRAID, n=10)
        assert report.all_passed()
