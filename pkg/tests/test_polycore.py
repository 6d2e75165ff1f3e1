import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polypillai.factor import factor
from polypillai.polycore import (
    MINUS_INFINITY,
    ONE,
    X,
    Poly,
    format_poly,
    gcd,
    nth_root_monic,
    rational_nth_root,
    squarefree_decomposition,
)

from .helpers import rand_poly

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(rationals, max_size=7).map(Poly)


def test_add_to_zero():
    assert (X + 1) + (-X - 1) == Poly()
    assert (X + 1 + (-X - 1)).degree == MINUS_INFINITY


def test_difference_of_squares():
    assert (X - 1) * (X + 1) == X ** 2 - 1


def test_divrem_example():
    s, r = (X ** 3 + 2 * X).divrem(X ** 2)
    assert (s, r) == (X, 2 * X)
    assert s * X ** 2 + r == X ** 3 + 2 * X


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        X.divrem(Poly())


def test_zero_degree_sentinel_is_not_an_int():
    z = Poly()
    assert z.degree == MINUS_INFINITY
    assert z.degree != -1
    assert z.degree < 0
    assert (z * (X + 1)).degree == MINUS_INFINITY


@given(polys, polys)
def test_degree_laws(a, b):
    assert (a * b).degree == a.degree + b.degree
    assert (a + b).degree <= max(a.degree, b.degree)


def test_divrem_round_trip_random():
    rng = random.Random(11)
    for _ in range(1000):
        a = rand_poly(rng, 7)
        b = rand_poly(rng, 4)
        s, r = a.divrem(b)
        assert s * b + r == a
        assert r.degree < b.degree


@pytest.mark.parametrize(
    "a, b, expected",
    [(X ** 2 - 1, X - 1, X - 1), (X ** 2 + 1, X + 2, ONE)],
)
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_of_constructed_common_factor():
    rng = random.Random(3)
    checked = 0
    while checked < 200:
        h = rand_poly(rng, 3, min_deg=1, monic=True)
        u = rand_poly(rng, 3, min_deg=0)
        v = rand_poly(rng, 3, min_deg=0)
        if u.is_zero() or v.is_zero() or gcd(u, v) != ONE:
            continue
        g = gcd(h * u, h * v)
        assert g == h
        assert g.divides(h * u) and g.divides(h * v)
        checked += 1


@given(polys, polys)
def test_gcd_divides_and_is_monic(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = gcd(a, b)
    assert g.is_monic()
    assert g.divides(a) and g.divides(b)


def test_gcd_zero_zero():
    with pytest.raises(ValueError):
        gcd(Poly(), Poly())


def test_squarefree_examples():
    assert squarefree_decomposition((X - 1) ** 2 * (X + 2)) == [(X + 2, 1), (X - 1, 2)]
    assert squarefree_decomposition(X ** 2 + 1) == [(X ** 2 + 1, 1)]
    assert squarefree_decomposition(Poly([7])) == []
    with pytest.raises(ValueError):
        squarefree_decomposition(Poly())


def test_squarefree_reassembles():
    rng = random.Random(5)
    for _ in range(200):
        f = rand_poly(rng, 0, monic=False)
        for i in range(1, 4):
            f = f * rand_poly(rng, 2, min_deg=1, monic=True) ** i
        parts = squarefree_decomposition(f)
        out = Poly.const(f.lc)
        for a, i in parts:
            out = out * a ** i
            assert a.is_monic()
            assert gcd(a, a.derivative()) == ONE
        assert out == f
        mults = [i for _, i in parts]
        assert mults == sorted(set(mults))
        for j, (a, _) in enumerate(parts):
            for b, _ in parts[j + 1:]:
                assert gcd(a, b) == ONE


def test_nth_root_examples():
    assert nth_root_monic((X + 1) ** 2, 2) == X + 1
    assert nth_root_monic(X ** 2 + 1, 2) is None
    h = X ** 2 + 3 * X + 1
    assert nth_root_monic(h ** 3, 3) == h
    assert nth_root_monic(X ** 3 + 1, 2) is None


def test_nth_root_validates():
    with pytest.raises(ValueError):
        nth_root_monic(2 * X ** 2, 2)
    with pytest.raises(ValueError):
        nth_root_monic(X ** 2, 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, max_size=5), st.integers(2, 5))
def test_nth_root_round_trip(lower, n):
    h = Poly(lower + [1])
    assert nth_root_monic(h ** n, n) == h


def test_rational_nth_root():
    assert rational_nth_root(Fraction(9, 4), 2) == Fraction(3, 2)
    assert rational_nth_root(Fraction(-27, 8), 3) == Fraction(-3, 2)
    assert rational_nth_root(Fraction(2), 2) is None
    assert rational_nth_root(Fraction(-4), 2) is None
    big = Fraction(3 ** 200, 7 ** 100)
    assert rational_nth_root(big ** 3, 3) == big


def test_format_poly():
    assert format_poly(Fraction(3, 2) * X ** 4 - X + 7) == "3/2*x^4 - x + 7"
    assert format_poly(Poly()) == "0"
    assert format_poly(-X ** 2 - Fraction(1, 2)) == "-x^2 - 1/2"


def test_compose_and_evaluate():
    f = X ** 2 + 1
    assert f.compose(X + 1) == X ** 2 + 2 * X + 2
    assert f(Fraction(1, 2)) == Fraction(5, 4)


def test_primitive_integer():
    content, ints = (Fraction(-3, 2) * X ** 2 + 3).primitive_integer()
    assert ints == [-2, 0, 1]
    assert content == Fraction(-3, 2)


def test_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = ()


def test_squarefree_agrees_with_factor_multiplicities():
    rng = random.Random(8)
    for _ in range(50):
        f = rand_poly(rng, 2, min_deg=1) ** 2 * rand_poly(rng, 3, min_deg=1)
        by_factor = {}
        for p, e in factor(f).factors:
            by_factor.setdefault(e, ONE)
            by_factor[e] = by_factor[e] * p
        assert dict((i, a) for a, i in squarefree_decomposition(f)) == by_factor
