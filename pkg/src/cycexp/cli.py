"""Command-line front end.

    cycexp factor   --q 3 --e 12
    cycexp order    --q 2 --poly "x+1"
    cycexp census   --q 3 --e 12 --exact
    cycexp bch      --q 2 --m 4 --a 5 --delta 3
    cycexp rs       --q 5 --a 0 --delta 3
    cycexp selftest --json

Output is JSON (sorted keys) unless ``--text`` is given.  Exit status: 0 on
success, 1 when a computation fails (cap exceeded, reducible modulus, ...),
2 on a usage error.  Set CYCEXP_LOG=debug|info for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import bch, census, orders
from .cyclotomic import factor_xe_minus_1
from .fields import FieldError, FieldSpec, PrimePower, make_field
from .poly import ParseError, parse_poly
from .selftest import run_selftest

log = logging.getLogger("cycexp")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} must be positive")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} must be non-negative")
    return v


def _prime_power(text: str) -> PrimePower:
    try:
        return PrimePower.from_int(int(text))
    except (ValueError, FieldError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_prime_power, required=True, help="field size (prime power)")
    common.add_argument("--base-modulus", help="modulus defining F_q when q is not prime")
    common.add_argument("--text", dest="format", action="store_const", const="text", default="json",
                        help="human-readable output instead of JSON")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--scan-limit", type=_positive, default=orders.SCAN_LIMIT,
                        help="cap on brute-force order scans (default %(default)s)")
    common.add_argument("--enum-cap", type=_positive, default=census.ENUM_CAP,
                        help="cap on enumerated divisors (default %(default)s)")

    parser = argparse.ArgumentParser(prog="cycexp", description="Exponents of cyclic, BCH and RS codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor x^e - 1 over F_q")
    p.add_argument("--e", type=_positive, required=True)

    p = sub.add_parser("order", parents=[common], help="order of a polynomial over F_q")
    p.add_argument("--poly", required=True)
    p.add_argument("--brute", action="store_true", help="also run the brute-force scan")

    p = sub.add_parser("census", parents=[common], help="count cyclic codes of exponent e")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--e", type=_positive)
    g.add_argument("--sweep", type=_positive, metavar="N", help="every e = 1..N")
    p.add_argument("--exact", action="store_true", help="also run the exact census")
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("bch", parents=[common], help="BCH code C(a, delta) of length q^m - 1")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--a", type=_nonnegative, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--modulus", help="modulus of F_(q^m) over F_q")
    p.add_argument("--beta", help="primitive element of F_(q^m)")

    p = sub.add_parser("rs", parents=[common], help="Reed-Solomon code of length q - 1")
    p.add_argument("--a", type=_nonnegative, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--beta", help="primitive element of F_q")

    p = sub.add_parser("selftest", help="re-run the worked examples")
    p.add_argument("--json", dest="format", action="store_const", const="json", default="text")
    return parser


def _base_field(args) -> FieldSpec:
    try:
        return make_field(args.q, base_modulus=args.base_modulus)
    except ParseError as exc:
        raise UsageError(f"--base-modulus: {exc}")


def _validate(args) -> dict:
    """Parse every textual flag up front; returns the objects needed later."""
    ctx = {}
    if args.command == "selftest":
        return ctx
    if args.base_modulus is not None and args.q.k == 1:
        raise UsageError("--base-modulus only applies when q is not prime")
    ctx["base"] = _base_field(args)
    if args.command == "order":
        try:
            ctx["poly"] = parse_poly(args.poly, ctx["base"])
        except (ParseError, FieldError) as exc:
            raise UsageError(f"--poly: {exc}")
    if args.command == "bch":
        if args.delta < 2:
            raise UsageError("--delta must be at least 2")
        if args.modulus is not None:
            try:
                ctx["modulus"] = parse_poly(args.modulus, ctx["base"])
            except (ParseError, FieldError) as exc:
                raise UsageError(f"--modulus: {exc}")
    if args.command == "rs" and args.delta < 2:
        raise UsageError("--delta must be at least 2")
    return ctx


def _cmd_factor(args, ctx):
    fac = factor_xe_minus_1(ctx["base"], args.e)
    return {
        "q": args.q.q,
        "e": args.e,
        "factors": [{"poly": str(p), "multiplicity": f, "order": o, "degree": p.degree}
                    for (p, f), o in zip(fac.factors, fac.orders)],
    }


def _cmd_order(args, ctx):
    g = ctx["poly"]
    res = orders.order_any(g)
    out = {
        "q": args.q.q,
        "poly": str(g),
        "order": res.order,
        "method": res.method,
        "factors": [{"poly": str(w.factor), "multiplicity": w.multiplicity,
                     "factor_order": w.factor_order, "order": w.order} for w in res.witness or ()],
    }
    if args.brute:
        out["order_bruteforce"] = orders.order_bruteforce(orders.strip_x(g), limit=args.scan_limit)
    return out


def _cmd_census(args, ctx):
    es = [args.e] if args.e is not None else list(range(1, args.sweep + 1))
    reports = []
    for e in es:
        log.info("census q=%s e=%s", args.q.q, e)
        rep = census.census_lower_bound(ctx["base"], e, exact=args.exact, cap=args.enum_cap,
                                        workers=args.workers)
        reports.append(rep.to_dict())
    return reports[0] if args.e is not None else {"q": args.q.q, "reports": reports}


def _cmd_bch(args, ctx):
    spec = bch.bch_code(ctx["base"], args.m, args.a, args.delta, ctx.get("modulus"), args.beta)
    return spec.to_dict()


def _cmd_rs(args, ctx):
    spec = bch.rs_code(ctx["base"], args.a, args.delta, args.beta)
    return spec.to_dict()


def _emit(obj, fmt: str, out):
    if fmt == "json":
        json.dump(obj, out, sort_keys=True, indent=2)
        out.write("\n")
        return
    if isinstance(obj, dict) and "reports" in obj:
        for rep in obj["reports"]:
            _emit(rep, fmt, out)
            out.write("\n")
        return
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, list) and val and isinstance(val[0], dict):
            out.write(f"{key}:\n")
            for item in val:
                out.write("  " + ", ".join(f"{k}={item[k]}" for k in item) + "\n")
        else:
            out.write(f"{key}: {val}\n")


def _selftest(args, out) -> int:
    results = run_selftest()
    if args.format == "json":
        json.dump({"passed": all(r.passed for r in results),
                   "checks": [r.to_dict() for r in results]}, out, sort_keys=True, indent=2)
        out.write("\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            detail = "" if r.passed else f"  (expected {r.expected!r}, got {r.error or repr(r.got)})"
            out.write(f"{status}  {r.name}{detail}\n")
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {"factor": _cmd_factor, "order": _cmd_order, "census": _cmd_census,
            "bch": _cmd_bch, "rs": _cmd_rs}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    level = os.environ.get("CYCEXP_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        return _selftest(args, out)
    try:
        ctx = _validate(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FieldError, ArithmeticError, ValueError) as exc:
        print(f"cycexp: error: {exc}", file=sys.stderr)
        return 1
    try:
        result = COMMANDS[args.command](args, ctx)
    except (ValueError, ArithmeticError) as exc:
        print(f"cycexp: error: {exc}", file=sys.stderr)
        return 1
    _emit(result, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
