import random
from fractions import Fraction

import pytest

from polypillai.function_field import RatFn
from polypillai.parse import ParseError, parse_poly, parse_ratfn, parse_rational
from polypillai.polycore import X, Poly, format_poly

from .helpers import rand_poly


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2 - 1", X ** 2 - 1),
        ("3/2*x^4 - x + 7", Fraction(3, 2) * X ** 4 - X + 7),
        ("(x+1)^2 - (x-1)^2", 4 * X),
        ("-x", -X),
        ("  - ( x - 2 ) ^ 3 ", -((X - 2) ** 3)),
        ("0", Poly()),
        ("2*3/4*x", Fraction(3, 2) * X),
        ("x^0", Poly([1])),
    ],
)
def test_parse_examples(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "text",
    ["3x", "x^(1/2)", "x^1/2", "x/2", "2/x", "x^-1", "x +", "(x", "y", "", "1/0", "x^2.5", "x**2",
     "x - - 1"],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_poly("x + 3x")
    assert exc.value.pos == 5
    assert exc.value.code == "parse_error"


def test_parse_ratfn():
    assert parse_ratfn("(x^2+1)/x") == RatFn(X ** 2 + 1, X)
    assert parse_ratfn("x^2/(x-1)") == RatFn(X ** 2, X - 1)
    assert parse_ratfn("1/2*x") == RatFn(Fraction(1, 2) * X)
    with pytest.raises(ParseError):
        parse_ratfn("x/(x-x)")


def test_parse_rational():
    assert parse_rational("-7/5") == Fraction(-7, 5)
    with pytest.raises(ParseError):
        parse_rational("x")


def test_print_parse_fixed_point():
    rng = random.Random(10)
    for _ in range(1000):
        p = rand_poly(rng, 8)
        text = format_poly(p)
        q = parse_poly(text)
        assert q == p
        assert format_poly(q) == text
