"""Solutions of ``p^n - q^m = f`` over polynomial rings.

Solutions are stored as pairs of :class:`ScaledPower` values so that a
``p`` with an irrational leading coefficient (but rational ``p^n``) is
still handled by exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .errors import DegenerateDegree, PillaiError, check_nonconstant
from .factor import monic_divisors
from .polycore import (
    X,
    Poly,
    as_fraction,
    format_poly,
    nth_root_monic,
    rational_nth_root,
)
from .unit_equation import UnitEquationInstance, power_instance


@dataclass(frozen=True)
class ScaledPower:
    """The polynomial ``scale * base**exponent`` with ``base`` monic."""

    exponent: int
    scale: Fraction
    base: Poly

    def __post_init__(self):
        object.__setattr__(self, "scale", as_fraction(self.scale))
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise ValueError("exponent must be a positive integer")
        if not self.scale:
            raise ValueError("scale must be nonzero")
        if not self.base.is_monic():
            raise ValueError("base must be a monic polynomial")

    @classmethod
    def from_poly(cls, p: Poly, exponent: int) -> ScaledPower:
        return cls(exponent, p.lc ** exponent, p.monic())

    @property
    def degree(self) -> int:
        return self.base.degree

    def to_poly(self) -> Poly:
        return self.base ** self.exponent * self.scale

    def rational_root(self) -> Poly | None:
        """Some rational ``p`` with ``p**exponent`` equal to this power, if one exists."""
        c = rational_nth_root(self.scale, self.exponent)
        return None if c is None else self.base * c

    def sort_key(self):
        return (self.exponent, self.base.sort_key(), self.scale)

    def to_json(self) -> dict:
        return {"exponent": self.exponent, "scale": _rat(self.scale), "base": format_poly(self.base)}


@dataclass(frozen=True)
class PillaiSolution:
    """``left`` stands for ``p^n`` and ``right`` for ``q^m``.

    ``p`` and ``q`` optionally keep rational witnesses; they do not take
    part in equality, since ``q`` and ``-q`` give the same even power.
    """

    left: ScaledPower
    right: ScaledPower
    p: Poly | None = field(default=None, compare=False)
    q: Poly | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.left.exponent

    @property
    def m(self) -> int:
        return self.right.exponent

    @property
    def shape(self) -> AdmissibleTuple:
        return AdmissibleTuple(self.n, self.m, self.left.degree, self.right.degree)

    def difference(self) -> Poly:
        return self.left.to_poly() - self.right.to_poly()

    def sort_key(self):
        return (self.left.sort_key(), self.right.sort_key())

    def to_json(self) -> dict:
        out = {"n": self.n, "m": self.m, "left": self.left.to_json(), "right": self.right.to_json()}
        if self.p is not None:
            out["p"] = format_poly(self.p)
        if self.q is not None:
            out["q"] = format_poly(self.q)
        return out


def solution_from_polys(p: Poly, n: int, q: Poly, m: int) -> PillaiSolution:
    return PillaiSolution(ScaledPower.from_poly(p, n), ScaledPower.from_poly(q, m), p=p, q=q)


class AdmissibleTuple(NamedTuple):
    n: int
    m: int
    dp: int
    dq: int


@dataclass(frozen=True)
class Verdict:
    """Result of a certification; truthy iff valid."""

    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid} if self.valid else {"valid": False, "reason": self.reason}


def _rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# the degree bound and the necessary conditions behind it


def bound_B(f: Poly) -> int:
    """4 + 12 d + 8 d^2 for d = deg f; every solution has max(n, m, deg p, deg q) below it."""
    check_nonconstant(f)
    d = f.degree
    return 4 + 12 * d + 8 * d * d


def is_admissible(f: Poly, tup) -> bool:
    n, m, dp, dq = tup
    d = f.degree
    if n < 2 or m < 2 or dp < 1 or dq < 1:
        return False
    # height bounds from the unit equation 1 + q^m/f - p^n/f = 0
    rhs = 1 + 2 * d + dp + dq
    if n * dp > rhs or m * dq > rhs:
        return False
    a, b = n * dp, m * dq
    if a != b and max(a, b) != d:
        return False
    if a == b and a < d:
        return False
    return max(n, m, dp, dq) <= bound_B(f)


def admissible_tuples(f: Poly) -> list[AdmissibleTuple]:
    """All (n, m, deg p, deg q) passing the necessary conditions.

    Sound but not complete: a listed tuple need not be realized by any
    actual solution.
    """
    B = bound_B(f)
    d = f.degree
    out = []
    for dp in range(1, B + 1):
        for dq in range(1, B + 1):
            rhs = 1 + 2 * d + dp + dq
            n_max, m_max = min(B, rhs // dp), min(B, rhs // dq)
            for n in range(2, n_max + 1):
                for m in range(2, m_max + 1):
                    if is_admissible(f, (n, m, dp, dq)):
                        out.append(AdmissibleTuple(n, m, dp, dq))
    return sorted(out)


def within_bound(f: Poly, sol: PillaiSolution) -> bool:
    return max(sol.shape) <= bound_B(f)


# ---------------------------------------------------------------------------
# certification


def _shape_verdict(sol: PillaiSolution) -> Verdict | None:
    if sol.n < 2 or sol.m < 2:
        return Verdict(False, "exponent_too_small")
    if sol.left.degree < 1 or sol.right.degree < 1:
        return Verdict(False, "degree_too_small")
    return None


def certify(f: Poly, sol: PillaiSolution) -> Verdict:
    """Exact check of ``p^n - q^m == f`` plus ``n, m >= 2`` and ``deg p, deg q >= 1``."""
    check_nonconstant(f)
    bad = _shape_verdict(sol)
    if bad is not None:
        return bad
    if sol.difference() != f:
        return Verdict(False, "identity_failed")
    return Verdict(True)


def certify_general(a: Poly, b: Poly, f: Poly, sol: PillaiSolution) -> Verdict:
    """Exact check of ``a p^n + b q^m == f`` with the same shape constraints."""
    if a.is_zero() or b.is_zero():
        raise PillaiError("coefficients a and b must be nonzero", "zero_coefficient")
    check_nonconstant(f)
    bad = _shape_verdict(sol)
    if bad is not None:
        return bad
    if a * sol.left.to_poly() + b * sol.right.to_poly() != f:
        return Verdict(False, "identity_failed")
    return Verdict(True)


def unit_instance(f: Poly, sol: PillaiSolution) -> UnitEquationInstance:
    """The unit equation ``1 + q^m/f - p^n/f = 0`` of a solution."""
    return power_instance(f, sol.left.to_poly(), sol.left.base, sol.right.to_poly(), sol.right.base)


# ---------------------------------------------------------------------------
# n = m = 2: (p - q)(p + q) = f


@dataclass(frozen=True)
class DivisorFamily:
    """Solutions ``p = (t g + f/(t g))/2``, ``q = (f/(t g) - t g)/2`` for nonzero rational ``t``.

    ``g`` is the smaller side of the unordered monic split
    ``{g, monic(f)/g}``.  Swapping the sides only flips the sign of ``q``.
    """

    f: Poly
    g: Poly

    @property
    def cofactor(self) -> Poly:
        return self.f.monic().exact_div(self.g)

    @property
    def f_over_g(self) -> Poly:
        return self.f.exact_div(self.g)

    def p_at(self, t) -> Poly:
        t = as_fraction(t)
        return (self.g * t + self.f_over_g * (1 / t)) * Fraction(1, 2)

    def q_at(self, t) -> Poly:
        t = as_fraction(t)
        return (self.f_over_g * (1 / t) - self.g * t) * Fraction(1, 2)

    def to_json(self) -> dict:
        g, fg = format_poly(self.g), format_poly(self.f_over_g)
        return {
            "split": [g, format_poly(self.cofactor)],
            "p_of_t": f"(t*({g}) + ({fg})/t)/2",
            "q_of_t": f"(({fg})/t - t*({g}))/2",
        }


def instantiate_family(fam: DivisorFamily, t) -> PillaiSolution:
    t = as_fraction(t)
    if not t:
        raise PillaiError("family parameter t must be nonzero", "zero_parameter")
    p, q = fam.p_at(t), fam.q_at(t)
    if p.degree < 1:
        raise DegenerateDegree("p", t)
    if q.degree < 1:
        raise DegenerateDegree("q", t)
    return solution_from_polys(p, 2, q, 2)


def _has_usable_parameter(fam: DivisorFamily) -> bool:
    # each of deg p < 1, deg q < 1 happens for at most two values of t
    for t in (1, 2, 3, 5, 7):
        try:
            instantiate_family(fam, t)
            return True
        except DegenerateDegree:
            pass
    return False


def solve_equal_squares(f: Poly) -> list[DivisorFamily]:
    """One family per unordered monic split of f over the rationals."""
    check_nonconstant(f)
    fm = f.monic()
    families = []
    for g in monic_divisors(f):
        if g.sort_key() > fm.exact_div(g).sort_key():
            continue
        fam = DivisorFamily(f, g)
        if _has_usable_parameter(fam):
            families.append(fam)
    return families


def locate_in_families(f: Poly, sol: PillaiSolution, families=None):
    """Find ``(family, t)`` whose instantiation reproduces ``sol``, or ``None``.

    Only possible for n = m = 2 solutions whose ``p`` and ``q`` are rational.
    """
    if sol.n != 2 or sol.m != 2:
        return None
    p = sol.p if sol.p is not None else sol.left.rational_root()
    q = sol.q if sol.q is not None else sol.right.rational_root()
    if p is None or q is None:
        return None
    if families is None:
        families = solve_equal_squares(f)
    for fam in families:
        # p - q = t g, or p + q = t g for the sign-flipped q
        for d in (p - q, p + q):
            if d.is_zero() or d.monic() != fam.g:
                continue
            t = d.lc
            try:
                cand = instantiate_family(fam, t)
            except DegenerateDegree:
                continue
            if cand == sol:
                return fam, t
    return None


# ---------------------------------------------------------------------------
# explicit parametric families


REMARK2_KINDS = ("monomial_k", "linear_bx", "affine_sr", "shifted_affine", "cubic")


def _param(params: dict, name: str, default=None) -> Fraction:
    if name not in params or params[name] is None:
        if default is None:
            raise PillaiError(f"missing parameter {name!r}", "parameter_domain")
        return as_fraction(default)
    return as_fraction(params[name])


def _int_param(params: dict, name: str) -> int:
    v = _param(params, name)
    if v.denominator != 1:
        raise PillaiError(f"parameter {name!r} must be an integer", "parameter_domain")
    return int(v)


def remark2_family(kind: str, a, **params) -> tuple[Poly, PillaiSolution]:
    """Build ``(f, solution)`` for one of the known one-parameter families.

    ``kind`` and its parameters:

    * ``monomial_k`` (k >= 2, b > 0): f = b x^k, p^k = (a^k + b) x^k, q = a x
    * ``linear_bx`` (b > 0): f = b x, p, q = a x +- b/(4a)
    * ``affine_sr`` (s != 0, r): f = s x + r, p, q = a x + ra/s +- s/(4a)
    * ``shifted_affine`` (s != 0, r, l >= 1): the affine family times x^l
    * ``cubic`` (u != 0, t, s): f = u x^3 + t x^2 + s x with quadratic p, q

    ``a`` must be a positive rational.
    """
    a = as_fraction(a)
    if a <= 0:
        raise PillaiError("family parameter a must be positive", "parameter_domain")
    x = X
    if kind == "monomial_k":
        k, b = _int_param(params, "k"), _param(params, "b")
        if k < 2 or b <= 0:
            raise PillaiError("monomial_k needs k >= 2 and b > 0", "parameter_domain")
        f = Poly.monomial(k, b)
        left = ScaledPower(k, a ** k + b, x)
        right = ScaledPower(k, a ** k, x)
        return f, PillaiSolution(left, right, p=left.rational_root(), q=x * a)
    if kind == "linear_bx":
        b = _param(params, "b")
        if b <= 0:
            raise PillaiError("linear_bx needs b > 0", "parameter_domain")
        shift = b / (4 * a)
        return x * b, solution_from_polys(x * a + shift, 2, x * a - shift, 2)
    if kind in ("affine_sr", "shifted_affine"):
        s, r = _param(params, "s"), _param(params, "r", 0)
        if not s:
            raise PillaiError(f"{kind} needs s != 0", "parameter_domain")
        centre = x * a + r * a / s
        p, q = centre + s / (4 * a), centre - s / (4 * a)
        f = x * s + r
        if kind == "shifted_affine":
            ell = _int_param(params, "l")
            if ell < 1:
                raise PillaiError("shifted_affine needs l >= 1", "parameter_domain")
            xl = Poly.monomial(ell)
            p, q, f = p * xl, q * xl, f * Poly.monomial(2 * ell)
        return f, solution_from_polys(p, 2, q, 2)
    if kind == "cubic":
        u, t, s = _param(params, "u"), _param(params, "t", 0), _param(params, "s", 0)
        if not u:
            raise PillaiError("cubic needs u != 0", "parameter_domain")
        f = Poly([0, s, t, u])
        p = Poly([a * s / u, (4 * a * a * t + u * u) / (4 * a * u), a])
        q = Poly([a * s / u, (4 * a * a * t - u * u) / (4 * a * u), a])
        return f, solution_from_polys(p, 2, q, 2)
    raise PillaiError(f"unknown family kind {kind!r}; expected one of {REMARK2_KINDS}", "parameter_domain")


# ---------------------------------------------------------------------------
# brute-force oracle


def grid_search(f: Poly, tup, grid) -> list[PillaiSolution]:
    """Every solution with q drawn from a rational coefficient grid.

    Enumerates all q of degree ``dq`` with coefficients in ``grid`` and
    keeps those for which ``q^m + f`` is a rational multiple of a monic
    n-th power of degree ``dp``.  A test oracle, not a solver over C.
    """
    check_nonconstant(f)
    n, m, dp, dq = tup
    values = sorted({as_fraction(c) for c in grid})
    if not values:
        raise ValueError("grid must be nonempty")
    leading = [c for c in values if c]
    found: dict = {}
    for lower in product(values, repeat=dq):
        for lc in leading:
            q = Poly(list(lower) + [lc])
            g = q ** m + f
            if g.degree != n * dp:
                continue
            h = nth_root_monic(g.monic(), n)
            if h is None:
                continue
            left = ScaledPower(n, g.lc, h)
            right = ScaledPower.from_poly(q, m)
            sol = PillaiSolution(left, right, p=left.rational_root(), q=q)
            key = sol.sort_key()
            if key not in found or q.sort_key() < found[key].q.sort_key():
                found[key] = sol
    return [found[k] for k in sorted(found)]
