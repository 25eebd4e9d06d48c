"""Round trip: every witness validates against its own label."""
import pytest

from octica.strata import build_catalogue
from octica.witnesses import WITNESS_BUILDERS, build_witness

CATALOGUE_KEYS = sorted({r.witness_key for r in build_catalogue() if not r.empty})


@pytest.mark.parametrize("key", sorted(WITNESS_BUILDERS))
def test_witness_round_trip(key):
    witness = build_witness(key)
    label = WITNESS_BUILDERS[key][0]
    assert witness.profile.label_tuple == label.match_tuple()
    assert witness.profile.half_log_canonical
    assert witness.curve.degree == 8


def test_catalogue_keys_are_buildable():
    assert set(CATALOGUE_KEYS) <= set(WITNESS_BUILDERS)


def test_empty_label_reports_its_reason():
    from octica.strata import L
    from octica.witnesses import WitnessConstructionError, witness
    with pytest.raises(WitnessConstructionError) as err:
        witness(L(0, 4, 0, 0, 0))
    assert "empty" in str(err.value)


def test_component_specific_configurations():
    # the two components of the one-[3;3]-one-quadruple stratum differ by the
    # quadruple point lying off or on the distinguished tangent line
    off = build_witness("N_12_p")
    on = build_witness("N_12_pp")
    rep_off = next(r for r in off.profile.reports if r.type_string() == "J10")
    rep_on = next(r for r in on.profile.reports if r.type_string() == "J10")
    quad_off = next(r for r in off.profile.reports if r.type_string() == "X9")
    quad_on = next(r for r in on.profile.reports if r.type_string() == "X9")

    def on_line(line, point):
        return line.evaluate({"x": point[0], "y": point[1], "z": point[2]}) == 0

    assert not on_line(rep_off.distinguished_tangent, quad_off.point)
    assert on_line(rep_on.distinguished_tangent, quad_on.point)
