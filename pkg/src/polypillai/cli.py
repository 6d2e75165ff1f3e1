"""Command line front end.  Every subcommand prints one line of canonical JSON.

Exit codes: 0 success, 1 usage or parse error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import pillai
from .errors import PillaiError
from .factor import factor
from .function_field import height, valuations
from .parse import ParseError, parse_poly, parse_ratfn, parse_rational
from .polycore import format_poly
from .unit_equation import verify_bm

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _rat(c) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _power(args, side: str, exponent: int) -> pillai.ScaledPower:
    plain = getattr(args, side)
    scale = getattr(args, f"{side}_scale")
    base = getattr(args, f"{side}_base")
    if plain is not None:
        if scale is not None or base is not None:
            raise UsageError(f"give either --{side} or --{side}-scale/--{side}-base, not both")
        p = parse_poly(plain)
        if p.is_zero():
            raise PillaiError(f"{side} must be nonzero", "zero_input")
        return pillai.ScaledPower.from_poly(p, exponent)
    if scale is None or base is None:
        raise UsageError(f"--{side} or both --{side}-scale and --{side}-base are required")
    s, h = parse_rational(scale), parse_poly(base)
    if not s or h.is_zero():
        raise PillaiError(f"{side} must be nonzero", "zero_input")
    # fold a non-monic base into the scale
    return pillai.ScaledPower(exponent, s * h.lc ** exponent, h.monic())


def _solution(args) -> pillai.PillaiSolution:
    return pillai.PillaiSolution(_power(args, "p", args.n), _power(args, "q", args.m))


def cmd_height(args):
    f = parse_ratfn(args.ratfn)
    h = height(f)
    if f.is_zero():
        return {"height": "inf", "places": []}
    places = [
        {"place": str(v), "weight": v.weight, "valuation": e} for v, e in valuations(f).items()
    ]
    return {"height": h, "places": places}


def cmd_bound(args):
    f = parse_poly(args.f)
    B = pillai.bound_B(f)
    return {"deg_f": f.degree, "B": B}


def cmd_tuples(args):
    f = parse_poly(args.f)
    return {
        "necessary_conditions_only": True,
        "tuples": [list(t) for t in pillai.admissible_tuples(f)],
    }


def cmd_certify(args):
    f = parse_poly(args.f)
    return pillai.certify(f, _solution(args)).to_json()


def cmd_certify_general(args):
    f, a, b = parse_poly(args.f), parse_poly(args.a), parse_poly(args.b)
    return pillai.certify_general(a, b, f, _solution(args)).to_json()


def cmd_solve2(args):
    f = parse_poly(args.f)
    families = pillai.solve_equal_squares(f)
    return {
        "families": [fam.to_json() for fam in families],
        "rational_splits_only": True,
        "sign_symmetry": "each family also yields (p, -q); t and -t give (-p, -q)",
    }


def cmd_family(args):
    params = {
        k: parse_rational(v)
        for k, v in (("k", args.k), ("b", args.b), ("s", args.s), ("r", args.r),
                     ("l", args.l), ("u", args.u), ("t", args.t))
        if v is not None
    }
    f, sol = pillai.remark2_family(args.kind, parse_rational(args.a), **params)
    return {"f": format_poly(f), "solution": sol.to_json(), "certified": pillai.certify(f, sol).valid}


def cmd_bm(args):
    f = parse_poly(args.f)
    sol = _solution(args)
    report = verify_bm(pillai.unit_instance(f, sol))
    return {
        "max_height": report.max_height,
        "s_size": report.s_size,
        "bound": report.bound,
        "holds": report.holds,
    }


def cmd_search(args):
    f = parse_poly(args.f)
    grid = [parse_rational(tok) for tok in args.grid.split(",") if tok.strip()]
    if not grid:
        raise UsageError("--grid needs at least one value")
    tup = pillai.AdmissibleTuple(args.n, args.m, args.dp, args.dq)
    sols = pillai.grid_search(f, tup, grid)
    return {"solutions": [s.to_json() for s in sols]}


def cmd_factor(args):
    f = parse_poly(args.f)
    if f.is_zero():
        raise PillaiError("cannot factor the zero polynomial", "zero_input")
    fz = factor(f)
    return {"unit": _rat(fz.unit), "factors": [[format_poly(p), e] for p, e in fz.factors]}


def _add_solution_flags(sp):
    sp.add_argument("--n", type=int, required=True, help="exponent of p")
    sp.add_argument("--m", type=int, required=True, help="exponent of q")
    for side in ("p", "q"):
        sp.add_argument(f"--{side}", help=f"{side} as a polynomial")
        sp.add_argument(f"--{side}-scale", dest=f"{side}_scale",
                        help=f"rational s with {side}^e = s * base^e")
        sp.add_argument(f"--{side}-base", dest=f"{side}_base", help="base polynomial")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="polypillai", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sp = sub.add_parser("height", help="height and valuations of a rational function")
    sp.add_argument("ratfn")
    sp.set_defaults(func=cmd_height)

    sp = sub.add_parser("bound", help="the bound 4 + 12 deg f + 8 (deg f)^2")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("tuples", help="(n, m, deg p, deg q) passing the necessary conditions")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_tuples)

    sp = sub.add_parser("certify", help="check p^n - q^m = f exactly")
    sp.add_argument("f")
    _add_solution_flags(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("certify-general", help="check a p^n + b q^m = f exactly")
    sp.add_argument("f")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    _add_solution_flags(sp)
    sp.set_defaults(func=cmd_certify_general)

    sp = sub.add_parser("solve2", help="all n = m = 2 families from rational divisor splits")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_solve2)

    sp = sub.add_parser("family", help="explicit one-parameter solution families")
    sp.add_argument("kind", choices=pillai.REMARK2_KINDS)
    sp.add_argument("--a", required=True, help="positive rational family parameter")
    for name in ("k", "b", "s", "r", "l", "u", "t"):
        sp.add_argument(f"--{name}")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("bm", help="Brownawell-Masser check on the unit equation of a solution")
    sp.add_argument("f")
    _add_solution_flags(sp)
    sp.set_defaults(func=cmd_bm)

    sp = sub.add_parser(
        "search",
        help="brute-force test oracle: q from a rational coefficient grid (not a solver over C)",
    )
    sp.add_argument("f")
    for name in ("n", "m", "dp", "dq"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--grid", required=True, help='comma separated rationals, e.g. "-1,0,1/2"')
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("factor", help="factorization over the rationals")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_factor)
    return parser


def _fail(code: str, message: str, status: int) -> int:
    print(canonical_json({"error": {"code": code, "message": message}}), file=sys.stderr)
    return status


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except ParseError as exc:
        return _fail(exc.code, str(exc), EXIT_USAGE)
    except PillaiError as exc:
        return _fail(exc.code, str(exc), EXIT_DOMAIN)
    print(canonical_json(result))
    return EXIT_OK


run = main

if __name__ == "__main__":
    sys.exit(main())
