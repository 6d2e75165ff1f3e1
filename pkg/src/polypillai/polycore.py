"""Dense univariate polynomials over the rationals.

Coefficients are stored low degree first as :class:`fractions.Fraction`
values, trailing zeros stripped.  The zero polynomial has an empty
coefficient tuple and degree ``MINUS_INFINITY``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Sequence

# Degree of the zero polynomial.  Absorbing under addition, smaller than every int.
MINUS_INFINITY = -math.inf


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable polynomial with exact rational coefficients.

    >>> Poly([-1, 0, 1]) == Poly.x() ** 2 - 1
    True
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([as_fraction(c) for c in coeffs]))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Poly:
        # caller guarantees Fractions and a stripped tuple
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or ``MINUS_INFINITY`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def sort_key(self):
        """Canonical order: degree first, then coefficients from the top down."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        if len(b) == 1:
            c = b[0]
            return Poly._raw(tuple(x * c for x in a))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result, base = Poly._raw((Fraction(1),)), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Poly:
        return self * Poly.const(c)

    def divrem(self, other: Poly) -> tuple[Poly, Poly]:
        """Return ``(s, r)`` with ``self == s*other + r`` and ``deg r < deg other``."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(r) - 1 < db:
            return Poly._raw(()), self
        inv = 1 / other.coeffs[-1]
        b = other.coeffs
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv
            q[k - db] = c
            if c:
                off = k - db
                for j in range(db + 1):
                    r[off + j] -= c * b[j]
        return Poly._raw(_strip(q)), Poly._raw(_strip(r[:db]))

    def __floordiv__(self, other) -> Poly:
        return self.divrem(other)[0]

    def __mod__(self, other) -> Poly:
        return self.divrem(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divrem(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        """True when ``self`` divides ``other`` (``self`` nonzero)."""
        return not other.divrem(self)[1]

    # -- misc ------------------------------------------------------------

    def monic(self) -> Poly:
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic associate")
        if self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> Poly:
        return Poly._raw(_strip([i * c for i, c in enumerate(self.coeffs)][1:]))

    def __call__(self, value):
        """Evaluate by Horner's rule; works for any ring element supporting + and *."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        if acc is None:
            return Fraction(0)
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = Poly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def denominator_lcm(self) -> int:
        return reduce(math.lcm, (c.denominator for c in self.coeffs), 1)

    def primitive_integer(self) -> tuple[Fraction, list[int]]:
        """Split into ``content * F`` with ``F`` primitive in Z[x] and ``lc(F) > 0``."""
        if self.is_zero():
            raise ValueError("zero polynomial has no primitive part")
        L = self.denominator_lcm()
        ints = [int(c * L) for c in self.coeffs]
        g = reduce(math.gcd, ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, L), [c // g for c in ints]


ZERO = Poly()
ONE = Poly([1])
X = Poly.x()


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "x") -> str:
    """Canonical text form, e.g. ``3/2*x^4 - x + 7``.  Re-parses to the same Poly."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = _fmt_rat(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{_fmt_rat(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a.divrem(b)[1]
        if b:
            b = b.monic()
    return a.monic()


def gcd_many(polys: Sequence[Poly]) -> Poly:
    return reduce(gcd, polys)


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(gcd(a, b)).monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm.

    Returns ``[(a_i, i), ...]`` with monic, squarefree, pairwise coprime
    ``a_i`` and strictly increasing multiplicities, such that
    ``f == lc(f) * prod(a_i ** i)``.  Trivial factors are omitted, so a
    constant input gives ``[]``.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    out = []
    df = f.derivative()
    a = gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of ``f``."""
    out = ONE
    for a, _ in squarefree_decomposition(f):
        out = out * a
    return out


def nth_root_monic(g: Poly, n: int) -> Poly | None:
    """Monic ``h`` with ``h**n == g``, or ``None`` if no such rational ``h`` exists.

    Coefficients of ``h`` are recovered from the top down; each new
    coefficient enters the next coefficient of ``h**n`` linearly with
    factor ``n``.  The candidate is confirmed by a full multiplication.
    """
    if n < 2:
        raise ValueError("root index must be at least 2")
    if not g.is_monic():
        raise ValueError("nth_root_monic needs a monic polynomial")
    N = g.degree
    if N % n:
        return None
    d = N // n
    h = [Fraction(0)] * (d + 1)
    h[d] = Fraction(1)
    for j in range(1, d + 1):
        partial = Poly._raw(_strip(list(h))) ** n
        h[d - j] = (g[N - j] - partial[N - j]) / n
    root = Poly._raw(_strip(h))
    return root if root ** n == g else None


def rational_nth_root(c: Fraction, n: int) -> Fraction | None:
    """Exact rational n-th root (the real one for odd n, positive one for even n)."""
    c = as_fraction(c)
    if c < 0:
        if n % 2 == 0:
            return None
        r = rational_nth_root(-c, n)
        return None if r is None else -r

    def iroot(v: int) -> int | None:
        if v in (0, 1):
            return v
        r = int(round(v ** (1.0 / n))) if v < 2 ** 1000 else _int_nth_root(v, n)
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** n == v:
                return cand
        r = _int_nth_root(v, n)
        return r if r ** n == v else None

    a, b = iroot(c.numerator), iroot(c.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _int_nth_root(v: int, n: int) -> int:
    # Newton iteration on integers, floor of the real root
    if v < 2:
        return v
    x = 1 << ((v.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y
