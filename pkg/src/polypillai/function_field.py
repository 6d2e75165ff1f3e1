"""Places, valuations and heights on the rational function field.

Only rationally defined places are represented: a monic irreducible
``P`` of degree ``d`` stands for its ``d`` conjugate complex points,
all carrying the same valuation.  Weighting each rational place by
``deg P`` reproduces the counts one would get over the complex numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator

from .factor import factor
from .polycore import ONE, Poly, format_poly, gcd


@total_ordering
class _InfiniteHeight:
    """Height of the zero element.  Compares above every integer, equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("inf-height")

    def __repr__(self):
        return "INFINITE_HEIGHT"

    def __str__(self):
        return "inf"


INFINITE_HEIGHT = _InfiniteHeight()


@dataclass(frozen=True)
class Place:
    """A finite place given by a monic irreducible polynomial, or the place at infinity."""

    poly: Poly | None = None

    def __post_init__(self):
        if self.poly is not None and not (self.poly.is_monic() and self.poly.degree >= 1):
            raise ValueError("finite places need a monic polynomial of degree >= 1")

    @classmethod
    def finite(cls, poly: Poly) -> Place:
        return cls(poly)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def weight(self) -> int:
        """Number of complex places lying over this one."""
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        return (1, ()) if self.poly is None else (0, self.poly.sort_key())

    def __lt__(self, other: Place) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "infinity" if self.poly is None else format_poly(self.poly)


INFINITY = Place()


class RatFn:
    """Reduced quotient ``num/den`` with ``den`` monic and ``gcd(num, den) = 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = ONE if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), ONE
        else:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lc
            num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @staticmethod
    def _coerce(other) -> RatFn:
        return other if isinstance(other, RatFn) else RatFn(other)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, (RatFn, Poly, int, Fraction)):
            other = self._coerce(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFn:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFn(self.num ** n, self.den ** n)

    def __repr__(self):
        return f"RatFn({self})"

    def __str__(self):
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


@dataclass(frozen=True)
class SUnitSupport:
    """Finite set of places; ``size_over_C`` is its size counted over the complex numbers."""

    places: frozenset[Place] = frozenset()

    @classmethod
    def of(cls, places: Iterable[Place]) -> SUnitSupport:
        return cls(frozenset(places))

    @property
    def size_over_C(self) -> int:
        return sum(v.weight for v in self.places)

    def __or__(self, other: SUnitSupport) -> SUnitSupport:
        return SUnitSupport(self.places | other.places)

    def __contains__(self, v: Place) -> bool:
        return v in self.places

    def __iter__(self) -> Iterator[Place]:
        return iter(sorted(self.places))

    def __len__(self) -> int:
        return len(self.places)

    def issubset(self, other: SUnitSupport) -> bool:
        return self.places <= other.places


def _nonzero(f: RatFn) -> RatFn:
    f = f if isinstance(f, RatFn) else RatFn(f)
    if f.is_zero():
        raise ValueError("valuations are undefined at the zero function")
    return f


def _multiplicity(P: Poly, g: Poly) -> int:
    k = 0
    while True:
        q, r = g.divrem(P)
        if r:
            return k
        g, k = q, k + 1


def valuation(f: RatFn, v: Place) -> int:
    """Order of ``f`` at ``v``; at infinity this is ``deg den - deg num``."""
    f = _nonzero(f)
    if v.is_infinite:
        return f.den.degree - f.num.degree
    return _multiplicity(v.poly, f.num) - _multiplicity(v.poly, f.den)


def valuations(f: RatFn) -> dict[Place, int]:
    """All nonzero valuations of ``f``, read off the factorizations of num and den."""
    f = _nonzero(f)
    out: dict[Place, int] = {}
    for P, e in factor(f.num).factors:
        out[Place(P)] = e
    for P, e in factor(f.den).factors:
        out[Place(P)] = -e
    at_inf = f.den.degree - f.num.degree
    if at_inf:
        out[INFINITY] = at_inf
    return dict(sorted(out.items()))


def support(f: RatFn) -> SUnitSupport:
    return SUnitSupport(frozenset(valuations(f)))


def sum_defect(f: RatFn) -> int:
    """Weighted sum of all valuations of ``f``.  Always 0 by the sum formula."""
    return sum(v.weight * e for v, e in valuations(f).items())


def height(f: RatFn, check: bool = False):
    """max(deg num, deg den), or ``INFINITE_HEIGHT`` for 0.

    With ``check=True`` the value is compared against the place sum
    (which factors num and den, so it is much slower).
    """
    f = f if isinstance(f, RatFn) else RatFn(f)
    if f.is_zero():
        return INFINITE_HEIGHT
    h = max(f.num.degree, f.den.degree)
    if check:
        slow = height_by_places(f)
        if slow != h:
            raise AssertionError(f"height mismatch for {f}: {h} vs place sum {slow}")
    return h


def height_by_places(f: RatFn):
    """Height as the weighted sum of positive valuations over all places."""
    f = f if isinstance(f, RatFn) else RatFn(f)
    if f.is_zero():
        return INFINITE_HEIGHT
    return sum(v.weight * e for v, e in valuations(f).items() if e > 0)


def is_s_unit(f: RatFn, S: SUnitSupport) -> bool:
    return support(f).issubset(S)
