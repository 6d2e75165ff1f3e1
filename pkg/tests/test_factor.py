import random
from fractions import Fraction

import pytest

from polypillai.factor import factor, factor_kronecker, is_irreducible, monic_divisors
from polypillai.polycore import ONE, X, Poly

from .helpers import rand_irreducible_product, rand_poly


def test_factor_examples():
    fz = factor(X ** 2 - 1)
    assert fz.unit == 1 and fz.factors == ((X - 1, 1), (X + 1, 1))
    assert factor(X ** 2 + 1).factors == ((X ** 2 + 1, 1),)
    f = 6 * (X - 1) ** 2 * (X ** 2 + X + 1)
    fz = factor(f)
    assert fz.unit == 6
    assert fz.factors == ((X - 1, 2), (X ** 2 + X + 1, 1))
    assert fz.expand() == f


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor(Poly())


def test_factor_constant():
    fz = factor(Poly([Fraction(-2, 3)]))
    assert fz.unit == Fraction(-2, 3) and fz.factors == ()


def test_irreducible_that_splits_modulo_every_prime():
    assert is_irreducible(X ** 4 + 1)
    assert is_irreducible(X ** 4 - 10 * X ** 2 + 1)


@pytest.mark.parametrize("f, expected", [(X + 5, True), (X ** 2 - 2, True), (X ** 2 - 1, False)])
def test_is_irreducible(f, expected):
    assert is_irreducible(f) is expected


def test_is_irreducible_constant():
    with pytest.raises(ValueError):
        is_irreducible(Poly([3]))


def test_monic_divisors_examples():
    assert monic_divisors(X ** 2 - 1) == [ONE, X - 1, X + 1, X ** 2 - 1]
    assert monic_divisors(X ** 2 + 1) == [ONE, X ** 2 + 1]
    f = (X - 1) ** 2 * (X + 1)
    divs = monic_divisors(f)
    assert len(divs) == 6 == len(set(divs))
    assert all(d.divides(f) for d in divs)


def test_factor_matches_construction():
    rng = random.Random(2024)
    for _ in range(500):
        f, expected, unit = rand_irreducible_product(rng)
        fz = factor(f)
        assert fz.expand() == f
        assert dict(fz.factors) == expected
        assert fz.unit == unit


def test_factor_invariant_under_scaling():
    rng = random.Random(9)
    for _ in range(100):
        f, _, _ = rand_irreducible_product(rng, max_factors=3)
        c = Fraction(rng.choice([-7, -1, 2, 5]), rng.choice([1, 3, 4]))
        assert factor(f * c).factors == factor(f).factors
        assert factor(f * c).unit == factor(f).unit * c


def test_canonical_ordering():
    fz = factor((X ** 2 + 1) * (X + 3) * (X - 2) * (X ** 2 - 2))
    keys = [p.sort_key() for p, _ in fz.factors]
    assert keys == sorted(keys)
    assert [p for p, _ in fz.factors][:2] == [X - 2, X + 3]


def test_monic_divisor_count_random():
    rng = random.Random(17)
    for _ in range(60):
        f, expected, _ = rand_irreducible_product(rng, max_factors=3, max_deg=2)
        divs = monic_divisors(f)
        count = 1
        for e in expected.values():
            count *= e + 1
        assert len(divs) == count == len(set(divs))
        assert all(d.divides(f) for d in divs)


def test_kronecker_agrees_with_zassenhaus():
    rng = random.Random(77)
    for _ in range(150):
        f = Poly([1])
        while f.degree < 1 or f.degree > 6:
            f = Poly([1])
            for _ in range(rng.randint(1, 3)):
                f = f * rand_poly(rng, 3, min_deg=1)
        assert factor_kronecker(f) == factor(f)


def test_kronecker_degree_limit():
    with pytest.raises(ValueError):
        factor_kronecker(X ** 9 + 1)


def test_larger_degree_reassembly():
    f = (X ** 4 - 10 * X ** 2 + 1) * (X ** 2 - 2) ** 3 * (3 * X - 1) * (X ** 5 - X - 1)
    fz = factor(f)
    assert fz.expand() == f
    assert len(fz.factors) == 4
