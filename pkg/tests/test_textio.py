import pytest
from hypothesis import given

from bisuper.core import Signature, TensorMonomial
from bisuper.textio import (
    ParseError,
    format_polynomial,
    parse_polynomial,
    polynomial_from_json,
    polynomial_to_json,
)
from strategies import polynomials

SIG = Signature(3, 2)


def test_grammar_examples():
    f = parse_polynomial("3/2 * y1|z1 + -1 * z1|y1", SIG)
    assert len(f) == 2
    g = parse_polynomial("y1^2 y3 z2 | y1 z1", SIG)
    (m, c), = list(g)
    assert m == TensorMonomial((2, 0, 1), (2,), (1, 0, 0), (1,)) and c == 1


def test_json_mirror_example():
    f = parse_polynomial("3/2 * y1^2 y3 z2 | y1 z1", SIG)
    assert polynomial_to_json(f) == [{"coeff": "3/2", "yu": [2, 0, 1], "zu": [2], "yv": [1, 0, 0], "zv": [1]}]


def test_odd_reordering_sign_and_nilpotency():
    assert parse_polynomial("z2 z1 | y1", SIG) == parse_polynomial("-1 * z1 z2 | y1", SIG)
    assert parse_polynomial("z1 z1 | y1", SIG) == 0
    assert parse_polynomial("z1^2 | y1", SIG) == 0
    assert parse_polynomial("0", SIG) == 0


@pytest.mark.parametrize(
    "text",
    ["", "y1 y2", "y4", "z3 | y1", "y1 |", "| y1", "3 y1", "y1 + + y2", "x1", "y1 ^ z1"],
)
def test_malformed_input_reports_position(text):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, SIG)
    assert exc.value.position >= 0


@given(polynomials(SIG))
def test_text_round_trip(f):
    assert parse_polynomial(format_polynomial(f), SIG) == f


@given(polynomials(SIG))
def test_json_round_trip(f):
    assert polynomial_from_json(polynomial_to_json(f), SIG) == f
