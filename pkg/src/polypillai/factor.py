"""Factorization of rational polynomials into monic irreducibles.

Main path: squarefree decomposition, Berlekamp factorization modulo a
small prime, multifactor Hensel lifting and exhaustive (Zassenhaus)
recombination.  :func:`factor_kronecker` is an independent, much slower
route by interpolation, kept as a cross-check for small degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .polycore import ONE, Poly, squarefree_decomposition

IntPoly = list  # low degree first, ints, no trailing zeros


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(P**e for P, e in factors)`` with monic irreducible ``P``."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.const(self.unit)
        for p, e in self.factors:
            out = out * p ** e
        return out

    @property
    def irreducibles(self) -> list[Poly]:
        return [p for p, _ in self.factors]


def _canonical(pairs) -> tuple[tuple[Poly, int], ...]:
    merged: dict[Poly, int] = {}
    for p, e in pairs:
        merged[p] = merged.get(p, 0) + e
    return tuple(sorted(merged.items(), key=lambda pe: pe[0].sort_key()))


def factor(f: Poly) -> Factorization:
    """Complete factorization over the rationals.

    >>> fz = factor(Poly([-1, 0, 1]))
    >>> [(str(p), e) for p, e in fz.factors]
    [('x - 1', 1), ('x + 1', 1)]
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    pairs = []
    for part, mult in squarefree_decomposition(f):
        _, F = part.primitive_integer()
        for g in zassenhaus(F):
            pairs.append((Poly(g).monic(), mult))
    return Factorization(f.lc, _canonical(pairs))


def is_irreducible(f: Poly) -> bool:
    if f.is_zero() or f.degree < 1:
        raise ValueError("irreducibility is only defined for non-constant polynomials")
    fs = factor(f).factors
    return len(fs) == 1 and fs[0][1] == 1


def monic_divisors(f: Poly) -> list[Poly]:
    """All monic divisors of ``f``, including 1 and ``f.monic()``, canonically sorted."""
    if f.is_zero():
        raise ValueError("the zero polynomial has infinitely many divisors")
    fs = factor(f).factors
    out = []
    for exps in product(*(range(e + 1) for _, e in fs)):
        d = ONE
        for (p, _), k in zip(fs, exps):
            if k:
                d = d * p ** k
        out.append(d)
    return sorted(out, key=Poly.sort_key)


# ---------------------------------------------------------------------------
# integer and modular polynomial helpers (lists, low degree first)


def _strip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _zp(a, p) -> list:
    return _strip([c % p for c in a])


def _zp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _zp(out, p)


def _zp_sub(a, b, p):
    return _zp_add(a, [-c for c in b], p)


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zp(out, p)


def _zp_divrem(a, b, p):
    """Division mod ``p`` (any modulus where ``lc(b)`` is invertible)."""
    r = [c % p for c in a]
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _strip(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        q[k - db] = c
        if c:
            off = k - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - c * b[j]) % p
    return _strip(q), _strip(r[:db])


def _zp_monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _zp_gcd(a, b, p):
    a, b = _zp(list(a), p), _zp(list(b), p)
    while b:
        a, b = b, _zp_divrem(a, b, p)[1]
    return _zp_monic(a, p) if a else []


def _zp_gcdex(a, b, p):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` monic, over the field Z/p."""
    r0, r1 = _zp(list(a), p), _zp(list(b), p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _zp_divrem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zp_sub(s0, _zp_mul(q, s1, p), p)
        t0, t1 = t1, _zp_sub(t0, _zp_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0])


def _zp_powmod(base, e, mod, p):
    result, base = [1], _zp_divrem(base, mod, p)[1]
    while e:
        if e & 1:
            result = _zp_divrem(_zp_mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _zp_divrem(_zp_mul(base, base, p), mod, p)[1]
    return result


def _derivative(a):
    return _strip([i * c for i, c in enumerate(a)][1:])


def _primes():
    yield 2
    n = 3
    while True:
        if all(n % d for d in range(3, math.isqrt(n) + 1, 2)):
            yield n
        n += 2


def _nullspace_mod_p(rows, p):
    """Basis of ``{v : M v = 0}`` over Z/p, ``M`` given as a list of rows."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                k = m[i][c]
                m[i] = [(x - k * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc] % p
        basis.append(v)
    return basis


def berlekamp(f: IntPoly, p: int) -> list[IntPoly]:
    """Monic irreducible factors of a monic squarefree ``f`` over Z/p."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    xp = _zp_powmod([0, 1], p, f, p)
    Q = []
    row = [1]
    for _ in range(n):
        Q.append(row + [0] * (n - len(row)))
        row = _zp_divrem(_zp_mul(row, xp, p), f, p)[1]
    # v is fixed by Frobenius iff v (Q - I) = 0, i.e. (Q - I)^T v = 0
    M = [[(Q[i][j] - (i == j)) % p for i in range(n)] for j in range(n)]
    basis = _nullspace_mod_p(M, p)
    r = len(basis)
    factors = [f]
    for v in basis:
        if len(factors) == r:
            break
        v = _strip(list(v))
        if len(v) <= 1:
            continue
        nxt = []
        for u in factors:
            if len(u) <= 2:
                nxt.append(u)
                continue
            for s in range(p):
                g = _zp_gcd(u, _zp_sub(v, [s], p), p)
                if len(g) > 1:
                    nxt.append(g)
                    u = _zp_divrem(u, g, p)[0]
                    if len(u) <= 1:
                        break
            if len(u) > 1:
                nxt.append(u)
        factors = nxt
    return sorted(factors, key=lambda a: (len(a), a[::-1]))


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step from modulus ``m`` to ``m*m`` (h monic)."""
    m2 = m * m
    e = _zp_sub(f, _zp_mul(g, h, m2), m2)
    q, r = _zp_divrem(_zp_mul(s, e, m2), h, m2)
    g2 = _zp_add(g, _zp_add(_zp_mul(t, e, m2), _zp_mul(q, g, m2), m2), m2)
    h2 = _zp_add(h, r, m2)
    b = _zp_sub(_zp_add(_zp_mul(s, g2, m2), _zp_mul(t, h2, m2), m2), [1], m2)
    c, d = _zp_divrem(_zp_mul(s, b, m2), h2, m2)
    s2 = _zp_sub(s, d, m2)
    t2 = _zp_sub(t, _zp_add(_zp_mul(t, b, m2), _zp_mul(c, g2, m2), m2), m2)
    return g2, h2, s2, t2


def _prod_mod(polys, m):
    out = [1]
    for a in polys:
        out = _zp_mul(out, a, m)
    return out


def hensel_lift(f: IntPoly, factors: list[IntPoly], p: int, k: int) -> list[IntPoly]:
    """Lift monic ``factors`` of ``f`` mod ``p`` to monic factors mod ``p**k``."""
    pk = p ** k
    if len(factors) == 1:
        return [_zp_monic(_zp(list(f), pk), pk)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    lc = f[-1] % p
    g = _zp_mul([lc], _prod_mod(left, p), p)
    h = _prod_mod(right, p)
    _, s, t = _zp_gcdex(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g, h = _zp(g, pk), _zp(h, pk)
    return hensel_lift(g, left, p, k) + hensel_lift(h, right, p, k)


def _symmetric(a, m):
    half = m // 2
    return [c - m if c > half else c for c in a]


def _int_exact_div(a: IntPoly, b: IntPoly):
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return None
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c, rem = divmod(r[k], b[-1])
        if rem:
            return None
        q[k - db] = c
        if c:
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
    return q if not any(r) else None


def _primitive(a: IntPoly) -> IntPoly:
    g = math.gcd(*a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _coefficient_bound(F: IntPoly) -> int:
    # Mignotte: a factor of degree <= n has coefficients bounded by 2^n * ||F||_2
    n = len(F) - 1
    norm2 = math.isqrt(sum(c * c for c in F)) + 1
    return abs(F[-1]) * (2 ** n) * norm2


def _choose_prime(F: IntPoly, skip: int = 0) -> int:
    dF = _derivative(F)
    for p in _primes():
        if F[-1] % p == 0:
            continue
        if len(_zp_gcd(_zp(list(F), p), _zp(list(dF), p), p)) != 1:
            continue
        if skip:
            skip -= 1
            continue
        return p


def zassenhaus(F: IntPoly) -> list[IntPoly]:
    """Irreducible factors over Z of a primitive squarefree ``F`` with ``lc(F) > 0``."""
    if len(F) <= 2:
        return [list(F)]
    for attempt in range(8):
        p = _choose_prime(F, attempt)
        fmod = _zp_monic(_zp(list(F), p), p)
        modular = berlekamp(fmod, p)
        if len(modular) == 1:
            return [list(F)]
        bound = 2 * _coefficient_bound(F)
        k = 1
        while p ** k <= bound:
            k += 1
        pk = p ** k
        lifted = hensel_lift(F, modular, p, k)
        found = _recombine(F, lifted, pk)
        check = [1]
        for g in found:
            check = _int_mul(check, g)
        if check == F:
            return found
    raise ArithmeticError("Zassenhaus factorization failed to reassemble")


def _int_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _recombine(F: IntPoly, lifted: list[IntPoly], pk: int) -> list[IntPoly]:
    found = []
    remaining = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(remaining):
        hit = None
        for subset in combinations(remaining, s):
            lc = F[-1]
            cand = _zp_mul([lc], _prod_mod([lifted[i] for i in subset], pk), pk)
            cand = _symmetric(cand, pk)
            if cand[0] and (lc * F[0]) % cand[0]:
                continue
            cand = _primitive(_strip(cand))
            q = _int_exact_div(F, cand)
            if q is not None:
                hit = subset, cand, q
                break
        if hit is None:
            s += 1
            continue
        subset, cand, q = hit
        found.append(cand)
        F = q
        remaining = [i for i in remaining if i not in subset]
    if len(F) > 1:
        found.append(_primitive(F))
    return found


# ---------------------------------------------------------------------------
# Kronecker's method: independent oracle, exponential cost


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _lagrange_basis(xs) -> list[list[Fraction]]:
    basis = []
    for i, xi in enumerate(xs):
        term = Poly.const(1)
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Poly([Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
        basis.append(list(term.coeffs) + [Fraction(0)] * (len(xs) - len(term.coeffs)))
    return basis


def _kronecker_find(F: Poly, d: int) -> Poly | None:
    """A primitive integer factor of degree exactly ``d`` of integer ``F``, if any."""
    values = []
    for x in range(-12, 13):
        v = int(F(x))
        if v == 0:
            if d == 1:
                return Poly([-x, 1])
            continue
        values.append((len(_int_divisors(v)), abs(x), x, v))
    values.sort()
    picked = values[: d + 1]
    xs = [x for _, _, x, _ in picked]
    choices = []
    for i, (_, _, _, v) in enumerate(picked):
        divs = _int_divisors(v)
        # a factor is determined up to sign, so fix the sign of its first value
        choices.append(divs if i == 0 else divs + [-u for u in divs])
    basis = _lagrange_basis(xs)
    for ys in product(*choices):
        coeffs = [sum(y * b[j] for y, b in zip(ys, basis)) for j in range(d + 1)]
        if coeffs[d] == 0 or any(c.denominator != 1 for c in coeffs):
            continue
        G = Poly(coeffs)
        if G.divides(F):
            return G
    return None


def factor_kronecker(f: Poly, max_degree: int = 8) -> Factorization:
    """Factorization by Kronecker's interpolation method (for cross-checks only)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise ValueError(f"Kronecker fallback limited to degree {max_degree}")
    if f.degree < 1:
        return Factorization(f.lc, ())
    _, ints = f.primitive_integer()
    F = Poly(ints)
    pairs = []
    d = 1
    while F.degree >= 1:
        if 2 * d > F.degree:
            pairs.append((F.monic(), 1))
            break
        G = _kronecker_find(F, d)
        if G is None:
            d += 1
            continue
        G = G.monic()
        while True:
            q, r = F.divrem(G)
            if r:
                break
            pairs.append((G, 1))
            F = q
    return Factorization(f.lc, _canonical(pairs))
