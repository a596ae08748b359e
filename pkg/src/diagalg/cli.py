"""Command-line interface: decisions, weight tables, Gram diagnostics, checks.

Subcommands:
  decide   family + parameters -> semisimplicity bound with constituents
  weights  weight table, one row per shape at levels n, n-2, ...
  gram     Gram-matrix rank/corank at one level, or first degenerate level
  verify   run named self-check suites

Exit codes: 0 success, 1 verification failure, 2 parameter/usage error.
Unbounded values render as "infinity" in text, and as null plus an
"unbounded" flag in JSON.  All output is exact; stdout carries results and
stderr diagnostics.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .criteria import (
    UNBOUNDED,
    Constituent,
    Verdict,
    decide_bmw,
    decide_brauer,
    decide_qbrauer,
)
from .exactalg import PrimeFieldElement, RootSpec
from .gram import first_degenerate_level, gram_matrix, rank
from .partitions import partitions_of
from .verify import SUITE_NAMES, run_all, run_suite
from .weights import (
    BMWParams,
    BrauerParams,
    GenericDelta,
    GenericR,
    IntegerDelta,
    NonIntegerDelta,
    NotRootOfUnity,
    ParameterError,
    PlusMinusOne,
    QBrauerParams,
    RootOfUnity,
    SignedPower,
    evaluate_weight,
    weight_factor_descriptions,
)

FAMILIES = ("brauer", "qbrauer", "bmw")


# --- parameter assembly -----------------------------------------------------


def _add_param_flags(p: argparse.ArgumentParser, family: str) -> None:
    p.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
    if family == "brauer":
        group = p.add_mutually_exclusive_group()
        group.add_argument("--delta", type=int, help="integer loop parameter")
        group.add_argument("--delta-generic", action="store_true", help="transcendental delta")
        group.add_argument("--delta-nonint", action="store_true", help="delta outside the prime field")
        return
    qgroup = p.add_mutually_exclusive_group()
    qgroup.add_argument("--e", type=int, help="order of q^2 (q a root of unity)")
    qgroup.add_argument("--not-root", action="store_true", help="q is not a root of unity")
    qgroup.add_argument("--q-pm-one", action="store_true", help="q = +-1 (classical limit)")
    p.add_argument("--f", type=int, help="order of q (defaults per --qe-sign)")
    p.add_argument("--qe-sign", type=int, choices=(1, -1), default=1,
                   help="sign of q^e; -1 makes --f default to 2e")
    p.add_argument("--delta", type=int, help="integer delta (only with --q-pm-one)")
    p.add_argument("--delta-generic", action="store_true", help="generic delta (only with --q-pm-one)")
    p.add_argument("--delta-nonint", action="store_true", help="non-integer delta (only with --q-pm-one)")
    rgroup = p.add_mutually_exclusive_group()
    rgroup.add_argument("--N", type=int, help="exponent in r = eps * q^N (BMW: r = eps * q^(N-1))")
    rgroup.add_argument("--r-generic", action="store_true", help="r independent of q")
    p.add_argument("--eps", type=int, choices=(1, -1), default=1, help="sign eps in r")


def _delta_from_args(args) -> object:
    if getattr(args, "delta", None) is not None:
        return IntegerDelta(args.delta)
    if getattr(args, "delta_nonint", False):
        return NonIntegerDelta()
    return GenericDelta()


def _spec_from_args(family: str, args):
    if family == "brauer":
        return BrauerParams(args.char, _delta_from_args(args))
    if args.q_pm_one:
        q = PlusMinusOne(_delta_from_args(args))
    elif args.not_root:
        q = NotRootOfUnity()
    elif args.e is not None:
        f = args.f if args.f is not None else (2 * args.e if args.qe_sign == -1 else args.e)
        q = RootOfUnity(RootSpec(args.e, f))
    else:
        raise ParameterError("choose a q regime: --e, --not-root, or --q-pm-one")
    if args.r_generic or args.q_pm_one:
        r = GenericR()
    elif args.N is not None:
        r = SignedPower(args.eps, args.N)
    else:
        raise ParameterError("choose an r regime: --N (with --eps) or --r-generic")
    cls = QBrauerParams if family == "qbrauer" else BMWParams
    return cls(args.char, q, r)


def _params_summary(family: str, spec) -> dict:
    out: dict = {"characteristic": spec.characteristic}
    if family == "brauer":
        d = spec.delta
        out["delta"] = d.value if isinstance(d, IntegerDelta) else type(d).__name__
        return out
    q = spec.q
    if isinstance(q, RootOfUnity):
        out["e"], out["f"] = q.spec.e, q.spec.f
    elif isinstance(q, PlusMinusOne):
        d = q.delta
        out["q"] = "pm-one"
        out["delta"] = d.value if isinstance(d, IntegerDelta) else type(d).__name__
    else:
        out["q"] = "not-root"
    r = spec.r
    if isinstance(r, SignedPower):
        out["eps"], out["N"] = r.eps, r.N
    else:
        out["r"] = "generic"
    return out


# --- verdict rendering ------------------------------------------------------


def _bound_text(value) -> str:
    return "infinity" if value is UNBOUNDED else str(value)


def render_verdict_json(family: str, spec, verdict: Verdict) -> str:
    """Serializes a Verdict; the inverse of parse_verdict_json."""
    data = {
        "family": family,
        "params": _params_summary(family, spec),
        "m": None if verdict.m is UNBOUNDED else verdict.m,
        "unbounded": verdict.m is UNBOUNDED,
        "constituents": [
            {"name": c.name, "value": None if c.value is UNBOUNDED else c.value}
            for c in verdict.constituents
        ],
        "witness": None
        if verdict.witness is None
        else {"partition": list(verdict.witness[0]), "box": list(verdict.witness[1])},
        "normalized": [[k, v] for k, v in verdict.normalized],
    }
    return json.dumps(data, indent=2)


def parse_verdict_json(text: str) -> Verdict:
    """Rebuilds the Verdict from render_verdict_json output."""
    data = json.loads(text)
    m = UNBOUNDED if data["unbounded"] else data["m"]
    constituents = tuple(
        Constituent(c["name"], UNBOUNDED if c["value"] is None else c["value"])
        for c in data["constituents"]
    )
    w = data["witness"]
    witness = None if w is None else (tuple(w["partition"]), tuple(w["box"]))
    normalized = tuple((k, v) for k, v in data["normalized"])
    return Verdict(m, constituents, witness, normalized)


def _render_verdict_text(verdict: Verdict, out) -> None:
    if verdict.m is UNBOUNDED:
        print("m = infinity (semisimple for all n)", file=out)
    else:
        print(f"m = {verdict.m} (semisimple exactly for n <= {verdict.m})", file=out)
    for c in verdict.constituents:
        print(f"  {c.name} = {_bound_text(c.value)}", file=out)
    for name, value in verdict.normalized:
        print(f"  normalized {name} = {value}", file=out)
    if verdict.witness is not None:
        la, box = verdict.witness
        print(f"  witness: partition {la} box {box}", file=out)


def cmd_decide(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    spec = _spec_from_args(args.family, args)
    decide = {"brauer": decide_brauer, "qbrauer": decide_qbrauer, "bmw": decide_bmw}[args.family]
    verdict = decide(spec)
    if args.format == "json":
        print(render_verdict_json(args.family, spec, verdict), file=out)
    else:
        _render_verdict_text(verdict, out)
    return 0


# --- weights ----------------------------------------------------------------


def _value_text(value) -> str:
    if isinstance(value, PrimeFieldElement):
        return f"{value.value} (mod {value.p})"
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def _weight_rows(family: str, spec, n: int) -> list[dict]:
    rows = []
    N = None
    desc_family = family
    if family != "brauer":
        if isinstance(spec.r, SignedPower):
            N = spec.r.N
        if isinstance(spec.q, PlusMinusOne):
            desc_family, N = "brauer", None
    for level in range(n, -1, -2):
        for la in partitions_of(level):
            wv = evaluate_weight(la, spec)
            symbolic = " * ".join(weight_factor_descriptions(desc_family, la, N)) or "1"
            if not wv.evaluable:
                status, value = "not-evaluable", ""
            elif wv.is_zero:
                status, value = "zero", "0"
            else:
                status = "nonzero"
                value = _value_text(wv.value) if wv.value is not None else ""
            rows.append(
                {
                    "level": level,
                    "partition": la,
                    "symbolic": symbolic,
                    "status": status,
                    "value": value,
                    "witness_box": wv.witness_box,
                }
            )
    return rows


def cmd_weights(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    spec = _spec_from_args(args.family, args)
    rows = _weight_rows(args.family, spec, args.n)
    if args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["level", "partition", "symbolic", "status", "value", "witness_box"])
        for r in rows:
            writer.writerow(
                [
                    r["level"],
                    ",".join(map(str, r["partition"])),
                    r["symbolic"],
                    r["status"],
                    r["value"],
                    "" if r["witness_box"] is None else f"{r['witness_box'][0]},{r['witness_box'][1]}",
                ]
            )
        return 0
    if args.format == "json":
        data = [
            {
                "level": r["level"],
                "partition": list(r["partition"]),
                "symbolic": r["symbolic"],
                "status": r["status"],
                "value": r["value"],
                "witness_box": None if r["witness_box"] is None else list(r["witness_box"]),
            }
            for r in rows
        ]
        print(json.dumps(data, indent=2), file=out)
        return 0
    for r in rows:
        la = r["partition"] or "()"
        line = f"level {r['level']}  {la}  {r['symbolic']}  [{r['status']}"
        if r["status"] == "nonzero" and r["value"]:
            line += f": {r['value']}"
        if r["status"] == "zero" and r["witness_box"] is not None:
            line += f" at box {r['witness_box']}"
        line += "]"
        print(line, file=out)
    return 0


# --- gram -------------------------------------------------------------------


def cmd_gram(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    spec = BrauerParams(args.char, IntegerDelta(args.delta))
    if args.n is None and args.n_max is None:
        raise ParameterError("gram needs --n (one level) or --n-max (scan)")
    if args.n_max is not None:
        level = first_degenerate_level(spec, args.n_max)
        if level is None:
            print(f"no degenerate level up to n = {args.n_max}", file=out)
        else:
            print(f"first degenerate level: n = {level}", file=out)
        return 0
    from .weights import validate_params

    validate_params(spec)
    point = PrimeFieldElement(args.char, args.delta) if args.char else Fraction(args.delta)
    matrix = gram_matrix(args.n, point, scaled=True)
    r = rank(matrix)
    dim = len(matrix)
    print(f"n = {args.n}: dimension {dim}, rank {r}, corank {dim - r}", file=out)
    return 0


# --- verify -----------------------------------------------------------------


def cmd_verify(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    if args.suite == "all":
        results = run_all(args.max_n)
    else:
        results = run_suite(args.suite, args.max_n)
    failures = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        detail = f"  {r.detail}" if r.detail else ""
        print(f"{mark}  [{r.suite}] {r.name}{detail}", file=out)
        failures += not r.passed
    print(f"{len(results) - failures}/{len(results)} checks passed", file=out)
    return 1 if failures else 0


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagalg",
        description="Exact semisimplicity criteria for Brauer, BMW, and q-Brauer algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    decide = sub.add_parser("decide", help="compute the semisimplicity bound")
    decide_sub = decide.add_subparsers(dest="family", required=True)
    for family in FAMILIES:
        p = decide_sub.add_parser(family)
        _add_param_flags(p, family)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=cmd_decide)

    weights = sub.add_parser("weights", help="weight table at levels n, n-2, ...")
    weights_sub = weights.add_subparsers(dest="family", required=True)
    for family in FAMILIES:
        p = weights_sub.add_parser(family)
        _add_param_flags(p, family)
        p.add_argument("--n", type=int, required=True, help="top level of the table")
        p.add_argument("--symbolic", action="store_true",
                       help="accepted for clarity; factored forms are always shown")
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.set_defaults(func=cmd_weights)

    gram = sub.add_parser("gram", help="Gram matrix rank diagnostics (Brauer)")
    gram.add_argument("--char", type=int, default=0)
    gram.add_argument("--delta", type=int, required=True)
    gram.add_argument("--n", type=int, help="level for a single rank computation")
    gram.add_argument("--n-max", type=int, help="scan for the first degenerate level")
    gram.set_defaults(func=cmd_gram)

    verify = sub.add_parser("verify", help="run self-check suites")
    verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    verify.add_argument("--max-n", type=int, default=None)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
