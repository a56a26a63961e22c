"""Command line front end.  JSON on stdout; exit codes:

0 ok, 1 invalid input, 2 budget exceeded, 3 obstructed, 4 unsupported case.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import elliptic, gl2f3, qexp, quartic, solver
from .errors import BudgetExceeded, GaloisEmbedError, InvalidInput, Obstructed, UnsupportedCase
from .exactmath import factor_small, integers
from .polyparse import parse_coeffs, parse_poly, parse_rational
from .quadforms import DEFAULT_HEIGHT_BUDGET

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_OBSTRUCTED, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4

ENV_BUDGETS = {
    "factor_budget": "GALOIS_EMBED_FACTOR_BUDGET",
    "height_budget": "GALOIS_EMBED_HEIGHT_BUDGET",
    "retry_budget": "GALOIS_EMBED_RETRY_BUDGET",
}


def poly_json(p):
    return {"coeffs": [str(c) for c in p.descending()], "text": str(p)}


def factorization_json(f):
    lc, factors = factor_small(f)
    return {
        "leading": str(lc),
        "factors": [{"factor": poly_json(p), "multiplicity": e} for p, e in factors],
    }


def _read_poly(args):
    if getattr(args, "poly", None) is not None:
        return parse_poly(args.poly), args.poly
    if getattr(args, "coeffs", None) is not None:
        return parse_coeffs(args.coeffs), args.coeffs
    raise InvalidInput("one of --poly or --coeffs is required")


def _budgets(args):
    out = {}
    defaults = {
        "factor_budget": integers.DEFAULT_FACTOR_BUDGET,
        "height_budget": DEFAULT_HEIGHT_BUDGET,
        "retry_budget": quartic.DEFAULT_RETRY_BUDGET,
    }
    for key, env in ENV_BUDGETS.items():
        val = getattr(args, key, None)
        if val is None and os.environ.get(env):
            val = int(os.environ[env])
        out[key] = defaults[key] if val is None else val
    return out


def _apply_budgets(b):
    integers.DEFAULT_FACTOR_BUDGET = b["factor_budget"]
    quartic.DEFAULT_RETRY_BUDGET = b["retry_budget"]


# --------------------------------------------------------------------------
# commands; each returns (report dict, exit code)
# --------------------------------------------------------------------------

def cmd_classify(args, budgets):
    f, src = _read_poly(args)
    v = quartic.validate(f)
    case = quartic.classify(v)
    return {
        "command": "classify",
        "input": {"source": src, "poly": poly_json(f)},
        "radical": poly_json(v.radical),
        "factorization": factorization_json(f),
        "case": solver.case_to_json(case),
    }, EXIT_OK


def cmd_classify_j(args, budgets):
    j = parse_rational(args.j)
    return {"command": "classify-j", "jclass": elliptic.classify_from_j(j).to_json()}, EXIT_OK


def cmd_obstruction(args, budgets):
    f, src = _read_poly(args)
    case = quartic.classify(quartic.validate(f))
    report = solver.obstruction(case)
    return {
        "command": "obstruction",
        "input": {"source": src, "poly": poly_json(f)},
        "case": solver.case_to_json(case),
        "obstruction": report.to_json(),
    }, EXIT_OK


def cmd_solve(args, budgets):
    f, src = _read_poly(args)
    v = quartic.validate(f)
    case = quartic.classify(v)
    report = solver.obstruction(case)
    out = {
        "command": "solve",
        "input": {"source": src, "poly": poly_json(f)},
        "budgets": budgets,
        "case": solver.case_to_json(case),
        "obstruction": report.to_json(),
        "records": [],
    }
    try:
        _, _, records = solver.solve(v, args.count, height_budget=budgets["height_budget"])
    except Obstructed:
        return out, EXIT_OBSTRUCTED
    except UnsupportedCase:
        return out, EXIT_UNSUPPORTED
    out["records"] = [solver.record_to_json(r) for r in records]
    out["verified"] = all(solver.verify_certificate(r, v) for r in records)
    return out, EXIT_OK


def cmd_family(args, budgets):
    t = parse_rational(args.t)
    E = elliptic.family(args.case, t)
    psi = elliptic.psi3(E)
    return {
        "command": "family",
        "case": args.case,
        "t": str(t),
        "curve": {"A": str(E.A), "B": str(E.B)},
        "j": str(elliptic.j_invariant(E)),
        "psi3": poly_json(psi),
        "psi3_factorization": factorization_json(psi),
    }, EXIT_OK


def cmd_group_table(args, budgets):
    return {"command": "group-table", "rows": gl2f3.group_table()}, EXIT_OK


def cmd_qexp_check(args, budgets):
    N = args.terms
    h = qexp.eta_quotient_h(N)
    t = qexp.hauptmodul_t(h)
    j = qexp.j_series(N)

    def head(s):
        return {str(k): str(s[k]) for k in range(s.val, min(s.val + 8, s.prec))}

    return {
        "command": "qexp-check",
        "terms": N,
        "h": head(h),
        "t": head(t),
        "j": head(j),
        "identity_holds": qexp.check_identity(N),
    }, EXIT_OK


def cmd_verify(args, budgets):
    f, src = _read_poly(args)
    with open(args.records) as fh:
        data = json.load(fh)
    items = data.get("records") if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise InvalidInput(f"{args.records} holds no list of records")
    v = quartic.validate(f)
    results = []
    for item in items:
        try:
            rec = solver.record_from_json(item, v)
            ok = solver.verify_certificate(rec, v)
        except (GaloisEmbedError, KeyError, ValueError, TypeError):
            ok = False
        results.append({"index": item.get("index"), "t": item.get("t"), "verified": ok})
    all_ok = bool(results) and all(r["verified"] for r in results)
    return {
        "command": "verify",
        "input": {"source": src, "poly": poly_json(f)},
        "results": results,
        "all_verified": all_ok,
    }, EXIT_OK if all_ok else EXIT_INVALID


COMMANDS = {
    "classify": cmd_classify,
    "classify-j": cmd_classify_j,
    "obstruction": cmd_obstruction,
    "solve": cmd_solve,
    "family": cmd_family,
    "group-table": cmd_group_table,
    "qexp-check": cmd_qexp_check,
    "verify": cmd_verify,
}


def build_parser():
    p = argparse.ArgumentParser(prog="galois-embed", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="FILE", help="write the report to FILE instead of stdout")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    common.add_argument("--factor-budget", type=int, dest="factor_budget")
    common.add_argument("--height-budget", type=int, dest="height_budget")
    common.add_argument("--retry-budget", type=int, dest="retry_budget")

    def poly_args(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--poly", help='polynomial in x, e.g. "x^4+2*x^2-12"')
        g.add_argument("--coeffs", help='degree-descending coefficients, e.g. "1,0,2,0,-12"')

    sub = p.add_subparsers(dest="command", required=True)
    for name in ("classify", "obstruction"):
        poly_args(sub.add_parser(name, parents=[common]))
    sp = sub.add_parser("solve", parents=[common])
    poly_args(sp)
    sp.add_argument("--count", type=int, default=1)
    sp = sub.add_parser("classify-j", parents=[common])
    sp.add_argument("--j", required=True)
    sp = sub.add_parser("family", parents=[common])
    sp.add_argument("--case", required=True, choices=elliptic.CASES)
    sp.add_argument("--t", required=True)
    sub.add_parser("group-table", parents=[common])
    sp = sub.add_parser("qexp-check", parents=[common])
    sp.add_argument("--terms", type=int, default=qexp.DEFAULT_TERMS)
    sp = sub.add_parser("verify", parents=[common])
    poly_args(sp)
    sp.add_argument("--records", required=True, help="JSON file written by solve --json")
    return p


def run(argv=None):
    """Execute one command; returns (report, exit code, parsed args)."""
    args = build_parser().parse_args(argv)
    budgets = _budgets(args)
    saved = (integers.DEFAULT_FACTOR_BUDGET, quartic.DEFAULT_RETRY_BUDGET)
    _apply_budgets(budgets)
    start = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args, budgets)
    except BudgetExceeded as e:
        report, code = {"command": args.command, "error": type(e).__name__, "message": str(e)}, EXIT_BUDGET
    except (InvalidInput, ValueError, ZeroDivisionError, OSError) as e:
        report, code = {"command": args.command, "error": type(e).__name__, "message": str(e)}, EXIT_INVALID
    except UnsupportedCase as e:
        report, code = {"command": args.command, "error": type(e).__name__, "message": str(e)}, EXIT_UNSUPPORTED
    finally:
        integers.DEFAULT_FACTOR_BUDGET, quartic.DEFAULT_RETRY_BUDGET = saved
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report, code, args


def main(argv=None):
    report, code, args = run(argv)
    text = json.dumps(report, indent=2)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
