"""Command-line interface.

Subcommands: ``epsilon``, ``table``, ``jucys``, ``vev``.  Exit codes: 0 on
success, 1 on usage or input errors, 2 when methods disagree or a
verification fails.  Numbers are printed as exact rationals ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import config
from .errors import DivergentExpectation, HZError, ParseError
from .expr import parse_product
from .fock import vev_symbolic
from .gluing import double_factorial
from .hzpipeline import METHODS, cross_validate, evaluate, genera, method_caps, validate
from .series import format_monomial
from .symgroup import esym_jm_all, length_class_sum

DEFAULT_ORDER = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _csv(rows: List[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2)


# -- epsilon -------------------------------------------------------------------

def cmd_epsilon(args) -> int:
    try:
        validate(args.genus, args.dprime)
    except HZError as exc:
        raise UsageError(str(exc))
    methods = METHODS if args.method == "all" else (args.method,)
    query = {"g": args.genus, "dprime": args.dprime, "method": args.method}
    if args.method == "all":
        report = cross_validate_cell(args.genus, args.dprime)
        results = [(m, v) for m, v in report["values"]]
        skipped = report["skipped"]
    else:
        results = [(args.method, evaluate(args.method, args.genus, args.dprime))]
        skipped = []
    verdict = "pass" if len({v for _, v in results}) <= 1 else "disagree"
    rows = [
        {"method": m, "g": args.genus, "dprime": args.dprime, "value": rational(v)}
        for m, v in results
    ]
    if args.format == "json":
        print(_dump({"query": query, "results": rows, "skipped": skipped, "verdict": verdict}))
    elif args.format == "csv":
        print(_csv([[r["method"], r["g"], r["dprime"], r["value"]] for r in rows],
                   ["method", "g", "dprime", "value"]))
    elif len(methods) == 1:
        print(rows[0]["value"])
    else:
        for r in rows:
            print(f"{r['method']:<14}{r['value']}")
        for s in skipped:
            print(f"{s['method']:<14}skipped ({s['reason']})")
        print(f"verdict       {verdict}")
    return 0 if verdict == "pass" else 2


def cross_validate_cell(g: int, dprime: int) -> dict:
    """Every method on one (g, d') cell, skipping those past their guardrail."""
    caps = method_caps()
    values, skipped = [], []
    for m in METHODS:
        if dprime > caps[m]:
            skipped.append({"method": m, "reason": "guardrail"})
            continue
        values.append((m, evaluate(m, g, dprime)))
    return {"values": values, "skipped": skipped}


# -- table -----------------------------------------------------------------------

def cmd_table(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    methods = METHODS if args.method == "all" else (args.method,)
    report = cross_validate(args.max, methods)
    if args.format == "json":
        payload = {
            "query": {"max": args.max, "method": args.method},
            "results": [
                {"method": r.method, "g": r.g, "dprime": r.dprime, "value": rational(r.value)}
                for r in report.results
            ],
            "row_sums": [
                {"method": m, "dprime": d, "value": _opt(report.row_sum(d, m))}
                for m in methods
                for d in range(1, args.max + 1)
            ],
            "skipped": [
                {"method": s.method, "g": s.g, "dprime": s.dprime, "reason": s.reason}
                for s in report.skipped
            ],
            "verdict": report.verdict,
        }
        print(_dump(payload))
    elif args.format == "csv":
        print(_csv([[r.method, r.g, r.dprime, rational(r.value)] for r in report.results],
                   ["method", "g", "dprime", "value"]))
    else:
        width = (args.max + 1) // 2 + 1
        for m in methods:
            print(f"# {m}")
            print("d'  " + "".join(f"{'g=' + str(g):>12}" for g in range(width)) + f"{'sum':>14}{'(2d-1)!!':>14}")
            for d in range(1, args.max + 1):
                cells = []
                for g in range(width):
                    if g not in genera(d):
                        cells.append("")
                        continue
                    v = report.value(g, d, m)
                    cells.append("skip" if v is None else rational(v))
                total = report.row_sum(d, m)
                print(f"{d:<4}" + "".join(f"{c:>12}" for c in cells)
                      + f"{_opt(total) or 'skip':>14}{double_factorial(2 * d - 1):>14}")
        print(f"verdict: {report.verdict}")
    return 0 if report.verdict == "pass" else 2


def _opt(x) -> Optional[str]:
    return None if x is None else rational(x)


# -- jucys -------------------------------------------------------------------------

def cmd_jucys(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    config.check(n, None, config.LIMITS.sym_n, "n")
    sigmas = esym_jm_all(n)
    rows = []
    for k, sigma in enumerate(sigmas):
        ok = sigma == length_class_sum(n, n - k)
        counts = sorted(sigma.class_counts().items(), reverse=True)
        rows.append({
            "k": k,
            "pass": ok,
            "classes": {",".join(map(str, mu)): c for mu, c in counts},
            "coefficients_all_one": all(c == 1 for _, c in sigma.items()),
        })
    verdict = "pass" if all(r["pass"] for r in rows) else "fail"
    if args.format == "json":
        print(_dump({"query": {"n": n}, "results": rows, "verdict": verdict}))
    elif args.format == "csv":
        print(_csv([[r["k"], mu, c, r["pass"]] for r in rows for mu, c in r["classes"].items()],
                   ["k", "partition", "terms", "pass"]))
    else:
        for r in rows:
            classes = "; ".join(f"({mu}): {c}" for mu, c in r["classes"].items())
            print(f"k={r['k']}  {'pass' if r['pass'] else 'FAIL'}  {classes}")
        print(f"verdict: {verdict}")
    return 0 if verdict == "pass" else 2


# -- vev ---------------------------------------------------------------------------

def _orders(specs: List[str]) -> Dict[str, int]:
    out = {}
    for spec in specs or []:
        name, sep, value = spec.partition("=")
        if not sep or not name.strip() or not value.strip().lstrip("-").isdigit():
            raise UsageError(f"bad --order {spec!r}; expected var=N")
        out[name.strip()] = int(value)
        if out[name.strip()] < 0:
            raise UsageError(f"order for {name} must be nonnegative")
    return out


def cmd_vev(args) -> int:
    try:
        product = parse_product(args.expression)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}")
    orders = _orders(args.order)
    window = {v: orders.get(v, DEFAULT_ORDER) for v in product.variables()}
    try:
        expr = vev_symbolic(product.ops)
    except DivergentExpectation as exc:
        raise UsageError(str(exc))
    series = expr.to_series(window)
    if series.is_zero() and product.total_energy() != 0:
        print(f"note: total energy {product.total_energy()} != 0, expectation vanishes",
              file=sys.stderr)
    terms = [(e, c) for e, c in series.terms()]
    if args.format == "json":
        payload = {
            "query": {"expression": args.expression, "orders": window},
            "results": [
                {"coefficient": rational(c), "monomial": {v: k for v, k in zip(series.vars, e) if k}}
                for e, c in terms
            ],
            "window": {v: up for v, (_, up) in series.window().items()},
            "verdict": "pass",
        }
        print(_dump(payload))
    elif args.format == "csv":
        print(_csv([[rational(c), *e] for e, c in terms], ["coefficient", *series.vars]))
    else:
        if not terms:
            print("0")
        for e, c in terms:
            mono = format_monomial(series.vars, e)
            print(f"{rational(c)}  {mono}" if mono else rational(c))
    return 0


# -- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hzfock", description="Harer-Zagier numbers by four independent routes.")
    p.add_argument("--force-n", type=int, default=None, metavar="N",
                   help="raise the brute-force guardrails to symmetric groups of size N")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("plain", "csv", "json"), default="plain")

    e = sub.add_parser("epsilon", help="eps_g(d') by one or all methods")
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--dprime", type=int, required=True)
    e.add_argument("--method", choices=METHODS + ("all",), default="formula")
    e.add_argument("--format", **fmt)
    e.set_defaults(func=cmd_epsilon)

    t = sub.add_parser("table", help="genus x d' table with row sums")
    t.add_argument("--max", type=int, required=True)
    t.add_argument("--method", choices=METHODS + ("all",), default="formula")
    t.add_argument("--format", **fmt)
    t.set_defaults(func=cmd_table)

    j = sub.add_parser("jucys", help="verify the Jucys correspondence in Q[S_n]")
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--format", **fmt)
    j.set_defaults(func=cmd_jucys)

    v = sub.add_parser("vev", help="vacuum expectation of a product of E operators")
    v.add_argument("expression")
    v.add_argument("--order", action="append", metavar="VAR=N",
                   help=f"truncation order per variable (default {DEFAULT_ORDER})")
    v.add_argument("--format", **fmt)
    v.set_defaults(func=cmd_vev)
    return p


def _force(n: int) -> None:
    print(f"warning: guardrails raised to n = {n}; brute-force routes may be slow",
          file=sys.stderr)
    config.LIMITS.sym_n = max(config.LIMITS.sym_n, n)
    config.LIMITS.direct_n = max(config.LIMITS.direct_n, n)
    config.LIMITS.gluing_dprime = max(config.LIMITS.gluing_dprime, n // 2)
    config.LIMITS.hurwitz_dprime = max(config.LIMITS.hurwitz_dprime, n // 2)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.force_n is not None:
        _force(args.force_n)
    try:
        return args.func(args)
    except (UsageError, HZError) as exc:
        print(f"hzfock {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
