import json

import pytest
from hypothesis import given

from conftest import ideals
from vfilt.monomial import RingContext
from vfilt.serialize import ParseError, format_ideal, ideal_from_json, ideal_to_json, parse_ideal


def test_parse_forms():
    a = parse_ideal("ideal(x^2, x*y^4) in [x,y]")
    b = parse_ideal("(x^2, x*y^4) in [x, y]")
    assert a == b
    assert a.gens == ((1, 4), (2, 0))


def test_parse_unit_and_zero():
    assert parse_ideal("(1) in [x]").is_unit
    assert parse_ideal("() in [x,y]").is_zero
    assert parse_ideal("(0) in [x]").is_zero


def test_parse_infers_ring_without_brackets():
    I = parse_ideal("(a*b, c)")
    assert I.ctx.variables == ("a", "b", "c")


def test_parse_with_context():
    ctx = RingContext(("x", "y"))
    assert parse_ideal("(y^2)", ctx).ctx == ctx
    with pytest.raises(ValueError):
        parse_ideal("(x) in [x,z]", ctx)


def test_parse_dotted_names():
    I = parse_ideal("(x1.1*x1.2) in [x1.1, x1.2]")
    assert I.gens == ((1, 1),)


@pytest.mark.parametrize(
    "text",
    ["(x^2, x*y in [x,y]", "(x^) in [x]", "(q) in [x]", "(2*x) in [x]", "(x) in [x,x]", "(x) [x]"],
)
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    assert err.value.line == 1 and err.value.column >= 1
    assert "column" in str(err.value)


@given(ideals())
def test_text_round_trip(I):
    assert parse_ideal(format_ideal(I)) == I


@given(ideals())
def test_json_round_trip(I):
    assert ideal_from_json(json.loads(json.dumps(ideal_to_json(I)))) == I
