"""Polynomial expression grammar and canonical printing."""

import random
from fractions import Fraction

import pytest

from fieldlab import (
    EmptyInput,
    PolySyntaxError,
    UPoly,
    format_elem,
    format_poly,
    parse_poly,
)
from conftest import random_upoly


def coeffs(text):
    return [c for c in parse_poly(text).coeffs]


# ---------------------------------------------------------------------------
# grammar
# ---------------------------------------------------------------------------


def test_reads_standard_form():
    assert coeffs("x^4 - 10*x^2 + 1") == [1, 0, -10, 0, 1]


def test_expands_products():
    assert parse_poly("(x+1)*(x-1)") == parse_poly("x^2-1")
    assert parse_poly("(x+1)*(x+1)*(x+1)") == parse_poly("x^3+3*x^2+3*x+1")


def test_rational_literals():
    assert coeffs("3/5 + 4/5*x") == [Fraction(3, 5), Fraction(4, 5)]
    assert coeffs("1/2*x") == [0, Fraction(1, 2)]


def test_unary_minus():
    assert coeffs("-x") == [0, -1]
    assert coeffs("--x") == [0, 1]
    assert coeffs("2-(-3)") == [5]


def test_implicit_whitespace():
    assert parse_poly("  x ^ 2 + 1 ") == parse_poly("x^2+1")


def test_syntax_error_position():
    with pytest.raises(PolySyntaxError) as e:
        parse_poly("x^^2")
    assert e.value.position == 2


def test_syntax_errors():
    # division and '^' apply only to rational literals and x respectively
    for bad in ["x^", "(x+1", "x+", "*x", "x x", "1//2", "x^-2",
                "x/2", "(x+1)^2", "(x+1)/(x-1)"]:
        with pytest.raises(PolySyntaxError):
            parse_poly(bad)


def test_bad_character_position():
    with pytest.raises(PolySyntaxError) as e:
        parse_poly("x^2 + y")
    assert e.value.position == 6


def test_empty_input():
    with pytest.raises(EmptyInput):
        parse_poly("")
    with pytest.raises(EmptyInput):
        parse_poly("   ")


def test_zero_denominator():
    with pytest.raises(PolySyntaxError) as e:
        parse_poly("1/0")
    assert e.value.position == 2


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def test_format_poly_canonical():
    assert format_poly(parse_poly("x^4-10*x^2+1")) == "x^4 - 10*x^2 + 1"
    assert format_poly(parse_poly("-x+1")) == "-x + 1"
    assert format_poly(UPoly([])) == "0"
    assert format_poly(UPoly([Fraction(1, 2)])) == "1/2"
    assert format_poly(parse_poly("x")) == "x"


def test_format_elem():
    assert format_elem([Fraction(3, 5), Fraction(4, 5)]) == "3/5 + 4/5*θ"
    assert format_elem([0, -1]) == "-θ"
    assert format_elem([0, 0]) == "0"
    assert format_elem([Fraction(1), Fraction(0), Fraction(-2)]) == "1 - 2*θ^2"


def test_round_trip_200():
    rng = random.Random(71)
    for _ in range(200):
        p = random_upoly(rng, max_deg=7, span=30)
        assert parse_poly(format_poly(p)) == p
