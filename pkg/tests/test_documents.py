import json

import pytest

from hopftwist.builtins import builtin_names, builtin_raw
from hopftwist.documents import SchemaError, build, parse_document, serialize
from hopftwist.expr import ExprSyntaxError, UnknownName


def test_heisenberg_coproduct_terms():
    doc = parse_document(json.dumps(builtin_raw("heisenberg")))
    assert doc.raw["group"]["coproduct"] == {"z": [["x", "y"]]}
    g = doc.group
    assert list(g.Z[2].items()) == [((g.var_mono("x"), g.var_mono("y")), 1)]


def test_round_trip_on_builtins():
    for name in builtin_names() + ["heisenberg-corrupted"]:
        text = serialize(builtin_raw(name))
        doc = parse_document(text)
        assert serialize(doc) == text
        assert parse_document(serialize(doc)).raw == doc.raw


def test_unparenthesised_fractional_power_is_rejected():
    raw = builtin_raw("mixed-nilpotent")
    raw["cocycle"]["multiplier"] = "h^1/2"
    with pytest.raises(ExprSyntaxError) as err:
        build(raw)
    assert "parenthes" in str(err.value)
    raw["cocycle"]["multiplier"] = "h^(1)/2"
    build(raw)


def test_undeclared_variable_in_coproduct():
    raw = builtin_raw("heisenberg")
    raw["group"]["coproduct"] = {"z": [["x", "w"]]}
    with pytest.raises(UnknownName) as err:
        build(raw)
    assert err.value.where == "group/coproduct/z/0"
    assert err.value.column == 1


def test_schema_errors_carry_a_location():
    raw = builtin_raw("heisenberg")
    del raw["cocycle"]
    with pytest.raises(SchemaError):
        build(raw)
    raw = builtin_raw("heisenberg")
    raw["group"]["mode"] = "lax"
    with pytest.raises(SchemaError) as err:
        build(raw)
    assert "group" in str(err.value)


def test_json_errors_report_line_and_column():
    with pytest.raises(ExprSyntaxError) as err:
        parse_document('{\n  "name": \n}')
    assert "line 3" in str(err.value)


def test_unknown_names_in_lie_section():
    raw = builtin_raw("heisenberg")
    raw["lie"]["brackets"] = [["X", "W", "Z"]]
    with pytest.raises((UnknownName, SchemaError)):
        build(raw)


def test_options_are_read():
    raw = builtin_raw("moyal")
    raw["options"] = {"degree": 6, "box": 0}
    doc = build(raw)
    assert doc.options == {"degree": 6, "box": 0}


def test_zeta_needs_a_cyclotomic_order():
    raw = builtin_raw("quantum-torus-cyclotomic")
    del raw["params"]["cyclotomic_order"]
    with pytest.raises(UnknownName):
        build(raw)
