"""Exact tools for the polynomial Pillai equation ``p^n - q^m = f``."""

from .errors import DegenerateDegree, DomainError, PillaiError
from .factor import Factorization, factor, is_irreducible, monic_divisors
from .function_field import (
    INFINITE_HEIGHT,
    INFINITY,
    Place,
    RatFn,
    SUnitSupport,
    height,
    is_s_unit,
    sum_defect,
    support,
    valuation,
)
from .parse import ParseError, parse_poly, parse_ratfn
from .pillai import (
    AdmissibleTuple,
    DivisorFamily,
    PillaiSolution,
    ScaledPower,
    admissible_tuples,
    bound_B,
    certify,
    certify_general,
    grid_search,
    instantiate_family,
    remark2_family,
    solve_equal_squares,
)
from .polycore import MINUS_INFINITY, Poly, gcd, nth_root_monic, squarefree_decomposition
from .unit_equation import (
    UnitEquationInstance,
    bm_bound,
    no_vanishing_proper_subsum,
    pillai_instance,
    verify_bm,
)

__version__ = "0.1.0"
