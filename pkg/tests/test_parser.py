import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from asympoly import Polynomial, poly_from_coeffs
from asympoly.parser import (
    ParseError,
    TokenKind,
    format_polynomial,
    format_rational_function,
    parse_polynomial,
    parse_rational_function,
    polynomial_from_json,
    tokenize,
)

from conftest import polynomials


def P(*c):
    return poly_from_coeffs(c)


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("8x^3+7", (7, 0, 0, 8)),
        ("-x", (0, -1)),
        ("x^2+x^2", (0, 0, 2)),
        ("(5/4)x+27/16", (F(27, 16), F(5, 4))),
        ("5/4x + 27/16", (F(27, 16), F(5, 4))),
        ("-(1/2)x^2 - x + 5/4", (F(5, 4), -1, F(-1, 2))),
        (" 0.5 x ^ 2 - 3 ", (-3, 0, F(1, 2))),
        ("x - x", ()),
        ("0", ()),
        ("(x^2+1)", (1, 0, 1)),
        ("+3x", (0, 3)),
        ("-x^2+3", (3, 0, -1)),
        ("2X", (0, 2)),
        (".25", (F(1, 4),)),
    ],
)
def test_parse_polynomial(text, coeffs):
    assert parse_polynomial(text) == P(*coeffs)


def test_tokens_positions_increase():
    toks = tokenize("(5x^3 + 13x^2)/(4x - 1/2)")
    pos = [t.position for t in toks]
    assert pos == sorted(pos) and len(set(pos)) == len(pos)
    assert toks[-1].kind is TokenKind.END
    assert [t.kind for t in tokenize("1/2")] == [
        TokenKind.NUMBER,
        TokenKind.SLASH,
        TokenKind.NUMBER,
        TokenKind.END,
    ]


@pytest.mark.parametrize(
    "text, pos",
    [("", 0), ("x^", 2), ("3 4", 2), ("x+", 2), ("x^1.5", 2), ("2x$", 2), ("x^-1", 2), ("1/0", 2)],
)
def test_parse_errors_positioned(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.position == pos
    assert info.value.position <= len(text)


def test_huge_exponent_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x^99999999999")


@pytest.mark.parametrize(
    "text, n, k",
    [
        ("(5x^3+13x^2+3x+9)/(4x^2+5x+7)", 3, 1),
        ("(x^4-2x^3+3x-9)/(2x^2-5)", 4, 2),
        ("8x^3+7/x-4", 3, 2),
        ("((5/4)x+1)/(x)", 1, 0),
        ("(1/2)/(x)", 0, -1),
        ("x^2+1", 2, 2),
    ],
)
def test_parse_rational_function(text, n, k):
    rf = parse_rational_function(text)
    assert (rf.n, rf.k) == (n, k)


def test_rational_function_coefficient_slashes():
    rf = parse_rational_function("((1/2)x^2+1/3)/(x-1/4)")
    assert rf.numerator == P(F(1, 3), 0, F(1, 2))
    assert rf.denominator == P(F(-1, 4), 1)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="denominator is zero"):
        parse_rational_function("(x+1)/(0)")


def test_ambiguous_slashes_demand_parentheses():
    with pytest.raises(ParseError, match="parentheses"):
        parse_rational_function("1/2x/3")


def test_unbalanced_parentheses():
    with pytest.raises(ParseError):
        parse_rational_function("(x+1/(x")
    with pytest.raises(ParseError):
        parse_rational_function("x+1)/(x")


def test_format_text():
    assert format_polynomial(P(128, 32, 8)) == "8x^2+32x+128"
    assert format_polynomial(Polynomial.zero()) == "0"
    assert format_polynomial(P(F(5, 4), -1, F(1, 2))) == "(1/2)x^2-x+5/4"
    assert format_polynomial(P(-4)) == "-4"
    assert format_polynomial(P(0, F(-2, 3))) == "-(2/3)x"


def test_format_latex():
    assert format_polynomial(P(F(27, 16), F(5, 4)), "latex") == r"\frac{5}{4}x+\frac{27}{16}"
    assert format_polynomial(P(0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1), "latex") == "x^{11}-x"


def test_format_json():
    doc = json.loads(format_polynomial(P(F(27, 16), F(5, 4)), "json"))
    assert doc == {"coefficients": [{"num": "27", "den": "16"}, {"num": "5", "den": "4"}]}
    big = P(F(10**40 + 1, 3**50))
    assert polynomial_from_json(format_polynomial(big, "json")) == big


def test_format_rational_function_round_trip():
    rf = parse_rational_function("(x^4-2x^3+3x-9)/(2x^2-5)")
    assert format_rational_function(rf) == "(x^4-2x^3+3x-9)/(2x^2-5)"
    assert parse_rational_function(format_rational_function(rf)) == rf


@settings(max_examples=300, deadline=None)
@given(polynomials(rational=True))
def test_round_trip(p):
    assert parse_polynomial(format_polynomial(p)) == p
    assert polynomial_from_json(format_polynomial(p, "json")) == p


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="0123456789x^+-/(). *a", max_size=30))
def test_garbage_never_crashes(text):
    for fn in (parse_polynomial, parse_rational_function):
        try:
            fn(text)
        except ParseError as e:
            assert 0 <= e.position <= len(text)
        except ZeroDivisionError:
            pass
