"""Unit equations ``1 + u_1 + ... + u_k = 0`` and the Brownawell-Masser height bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import PillaiError
from .function_field import (
    INFINITY,
    RatFn,
    SUnitSupport,
    height,
    is_s_unit,
    support,
)
from .polycore import ONE, Poly, lcm

MAX_SUBSUM_TERMS = 20


@dataclass(frozen=True)
class UnitEquationInstance:
    units: tuple[RatFn, ...]
    S: SUnitSupport
    genus: int = 0

    def __post_init__(self):
        if any(u.is_zero() for u in self.units):
            raise PillaiError("unit equation terms must be nonzero", "zero_unit")
        total = RatFn(1)
        for u in self.units:
            total = total + u
        if not total.is_zero():
            raise PillaiError("1 + u_1 + ... + u_k does not vanish", "not_a_unit_equation")
        for u in self.units:
            if not is_s_unit(u, self.S):
                raise PillaiError(f"{u} is not an S-unit for the given S", "not_s_unit")

    @property
    def k(self) -> int:
        return len(self.units)

    @property
    def terms(self) -> tuple[RatFn, ...]:
        return (RatFn(1),) + self.units


@dataclass(frozen=True)
class BMReport:
    max_height: int
    bound: int
    s_size: int
    holds: bool
    subsum_ok: bool


def bm_bound(k: int, s_size_over_C: int, genus: int = 0) -> int:
    """binomial(k, 2) * (|S| + max(0, 2*genus - 2))."""
    if k < 1 or s_size_over_C < 0 or genus < 0:
        raise ValueError("need k >= 1, |S| >= 0 and genus >= 0")
    return comb(k, 2) * (s_size_over_C + max(0, 2 * genus - 2))


def no_vanishing_proper_subsum(instance: UnitEquationInstance) -> bool:
    """True iff no nonempty proper subset of ``{1, u_1, ..., u_k}`` sums to zero.

    All terms are put over a common denominator so each subset sum is a
    plain polynomial addition.
    """
    terms = instance.terms
    if len(terms) > MAX_SUBSUM_TERMS:
        raise PillaiError(
            f"exhaustive subsum check is capped at {MAX_SUBSUM_TERMS} terms", "too_many_terms"
        )
    common = ONE
    for t in terms:
        common = lcm(common, t.den)
    numerators = [t.num * common.exact_div(t.den) for t in terms]
    n = len(numerators)
    full = (1 << n) - 1
    for mask in range(1, full):
        acc = Poly()
        for i in range(n):
            if mask >> i & 1:
                acc = acc + numerators[i]
        if acc.is_zero():
            return False
    return True


def pillai_instance(f: Poly, p: Poly, n: int, q: Poly, m: int) -> UnitEquationInstance:
    """The instance ``1 + q^m/f - p^n/f = 0`` attached to a solution of ``p^n - q^m = f``."""
    if f.is_zero() or p.is_zero() or q.is_zero():
        raise PillaiError("f, p and q must be nonzero", "zero_input")
    return power_instance(f, p ** n, p, q ** m, q)


def power_instance(f: Poly, p_power: Poly, p_base: Poly, q_power: Poly, q_base: Poly):
    """Like :func:`pillai_instance`, given the powers directly.

    ``p_base``/``q_base`` only determine the places of ``p`` and ``q``, so a
    scalar multiple (e.g. a monic base of an irrational ``p``) works too.
    """
    if f.is_zero() or p_base.is_zero() or q_base.is_zero():
        raise PillaiError("f, p and q must be nonzero", "zero_input")
    if p_power - q_power != f:
        raise PillaiError("p^n - q^m != f", "identity_failed")
    S = support(RatFn(f)) | support(RatFn(p_base)) | support(RatFn(q_base))
    S = S | SUnitSupport.of([INFINITY])
    units = (RatFn(q_power, f), RatFn(-p_power, f))
    return UnitEquationInstance(units, S, 0)


def verify_bm(instance: UnitEquationInstance) -> BMReport:
    subsum_ok = no_vanishing_proper_subsum(instance)
    max_h = max(height(u) for u in instance.units)
    s_size = instance.S.size_over_C
    bound = bm_bound(instance.k, s_size, instance.genus)
    # holds=False together with subsum_ok=True would contradict the theorem
    return BMReport(
        max_height=max_h, bound=bound, s_size=s_size, holds=max_h <= bound, subsum_ok=subsum_ok
    )
