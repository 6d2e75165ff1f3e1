"""Random generators shared by the test modules.

Generators build inputs from known pieces so expected values never come
from the code under test.
"""

import random
from fractions import Fraction

from polypillai.function_field import RatFn
from polypillai.polycore import Poly

SMALL_RATIONALS = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]


def rand_rat(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        c = rng.choice(SMALL_RATIONALS)
        if c or not nonzero:
            return c


def rand_poly(rng: random.Random, max_deg: int, min_deg: int = 0, monic: bool = False) -> Poly:
    d = rng.randint(min_deg, max_deg)
    coeffs = [rand_rat(rng) for _ in range(d)]
    coeffs.append(Fraction(1) if monic else rand_rat(rng, nonzero=True))
    return Poly(coeffs)


def rand_ratfn(rng: random.Random, max_deg: int = 8) -> RatFn:
    num = rand_poly(rng, max_deg)
    den = rand_poly(rng, max_deg)
    return RatFn(num, den)


def eisenstein_irreducible(rng: random.Random, degree: int) -> Poly:
    """A primitive integer polynomial that is irreducible by Eisenstein's criterion."""
    if degree == 1:
        return Poly([rng.choice([-5, -3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 2, 3])])
    p = rng.choice([2, 3, 5])
    lead = rng.choice([c for c in range(1, 5) if c % p])
    const = p * rng.choice([c for c in range(-3, 4) if c and c % p])
    middle = [p * rng.randint(-2, 2) for _ in range(degree - 1)]
    return Poly([const] + middle + [lead])


def rand_irreducible_product(rng: random.Random, max_factors: int = 4, max_deg: int = 4):
    """(product, {monic irreducible: multiplicity}, unit) built from Eisenstein pieces."""
    expected: dict = {}
    f = Poly([1])
    for _ in range(rng.randint(1, max_factors)):
        g = eisenstein_irreducible(rng, rng.randint(1, max_deg))
        e = rng.choice([1, 1, 1, 2, 3])
        f = f * g ** e
        expected[g.monic()] = expected.get(g.monic(), 0) + e
    unit = rand_rat(rng, nonzero=True)
    return f * unit, expected, f.lc * unit


A_VALUES = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(7, 5)]

REMARK2_PARAMS = [
    ("monomial_k", dict(k=2, b=1)),
    ("monomial_k", dict(k=2, b=Fraction(3, 2))),
    ("monomial_k", dict(k=3, b=1)),
    ("monomial_k", dict(k=3, b=5)),
    ("monomial_k", dict(k=2, b=5)),
    ("monomial_k", dict(k=3, b=Fraction(2, 3))),
    ("linear_bx", dict(b=1)),
    ("linear_bx", dict(b=4)),
    ("linear_bx", dict(b=Fraction(2, 3))),
    ("affine_sr", dict(s=3, r=2)),
    ("affine_sr", dict(s=1, r=-1)),
    ("affine_sr", dict(s=-2, r=Fraction(5, 3))),
    ("shifted_affine", dict(s=1, r=1, l=1)),
    ("shifted_affine", dict(s=2, r=-3, l=2)),
    ("cubic", dict(u=1, t=1, s=1)),
    ("cubic", dict(u=2, t=-1, s=3)),
    ("cubic", dict(u=-1, t=0, s=Fraction(1, 2))),
]


def remark2_cases():
    return [(kind, params, a) for kind, params in REMARK2_PARAMS for a in A_VALUES]


def solution_corpus():
    """(origin, f, solution) for every solution the suites generate."""
    from polypillai.pillai import (
        grid_search,
        instantiate_family,
        remark2_family,
        solve_equal_squares,
    )
    from polypillai.errors import DegenerateDegree
    from polypillai.polycore import X

    corpus = []
    for kind, params, a in remark2_cases():
        f, sol = remark2_family(kind, a, **params)
        corpus.append((f"remark2:{kind}", f, sol))
    family_fs = [4 * X, X ** 2 - 1, X ** 2 + 1, (X - 1) ** 2 * (X + 2), X ** 3 + X ** 2 + X]
    for f in family_fs:
        for fam in solve_equal_squares(f):
            for t in (Fraction(1, 2), 1, 2, 3, -1, Fraction(-5, 3)):
                try:
                    corpus.append(("family", f, instantiate_family(fam, t)))
                except DegenerateDegree:
                    pass
    grid = range(-3, 4)
    for f in (4 * X, X ** 2 - 1):
        for dp in (1, 2):
            for dq in (1, 2):
                for sol in grid_search(f, (2, 2, dp, dq), grid):
                    corpus.append(("grid", f, sol))
    for sol in grid_search(X ** 3 + 3 * X ** 2 + 3 * X, (3, 3, 1, 1), grid):
        corpus.append(("grid", X ** 3 + 3 * X ** 2 + 3 * X, sol))
    return corpus
