"""Command-line front end.

Subcommands:
  verify  -- classify one (curve, l) instance, predict the pattern of
             psi_l when in scope, factor psi_l, and compare
  scan    -- sweep curves over a prime range and an l-set, verifying every
             in-scope instance and archiving one witness per class
  oracle  -- explicit torsion-basis run on one instance
  factor  -- factor an arbitrary input polynomial

Exit codes: 0 on success (match or out-of-scope), 2 when a prediction
mismatches the actual factorization, 1 on usage or validation errors.
JSON reports carry schema_version and are deterministic for a fixed
config and seed (pass --no-timing to drop the only unstable field).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from sympy import isprime

from . import __version__
from .curve import POINT_COUNT_BOUND, Curve, CurveError
from .divpoly import DEFAULT_INDEX_CAP
from .ff import FieldError, make_extension, make_prime_field
from .oracle import OracleError, oracle_report
from .pattern import VerificationReport, verify
from .polyring import Polynomial, factor, pattern_of
from .scan import ALL_KINDS, scan

SCHEMA_VERSION = 1


def load_report_schema() -> dict:
    """The JSON schema (version 1) that all CLI reports validate against."""
    from importlib import resources

    text = resources.files("divpattern").joinpath("report.schema.json").read_text()
    return json.loads(text)


class UsageError(ValueError):
    pass


def _parse_vector(text: str):
    try:
        return [int(part) for part in str(text).split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _build_field(p: int, m: int):
    try:
        field = make_prime_field(p)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc
    if m > 1:
        field = make_extension(field, m)
    elif m != 1:
        raise UsageError(f"extension degree must be >= 1, got {m}")
    if field.cardinality > POINT_COUNT_BOUND:
        raise UsageError(
            f"base cardinality {field.cardinality} exceeds the point-counting "
            f"bound {POINT_COUNT_BOUND}"
        )
    return field


def _build_curve(args) -> Curve:
    field = _build_field(args.p, args.m)
    a = _parse_vector(args.a)
    b = _parse_vector(args.b)
    if args.m == 1:
        if len(a) != 1 or len(b) != 1:
            raise UsageError("a and b must be single integers when m = 1")
        a, b = a[0], b[0]
    try:
        return Curve(field, a, b)
    except (CurveError, FieldError) as exc:
        raise UsageError(str(exc)) from exc


def _check_l(l: int, p: int):
    if l % 2 == 0 or not isprime(l):
        raise UsageError(f"l must be an odd prime, got {l}")
    if l == p:
        raise UsageError(f"l must differ from the characteristic p = {p}")
    if l > DEFAULT_INDEX_CAP:
        raise UsageError(f"l is capped at {DEFAULT_INDEX_CAP}")


# -- serialization -----------------------------------------------------------


def _instance_dict(curve: Curve, l: Optional[int]) -> dict:
    field = curve.field
    p = field.characteristic
    m = field.degree
    out = {"p": p, "m": m}
    if m > 1:
        out["modulus"] = [int(c) for c in field.modulus]
        out["a"] = [int(c) for c in curve.a.rep]
        out["b"] = [int(c) for c in curve.b.rep]
    else:
        out["a"] = int(curve.a.rep)
        out["b"] = int(curve.b.rep)
    if l is not None:
        out["l"] = l
    return out


def _class_dict(fc) -> dict:
    out = {
        "kind": fc.kind,
        "l": fc.l,
        "trace_mod_l": fc.trace,
        "q_mod_l": fc.q_mod_l,
        "alpha": fc.alpha,
    }
    if fc.rho is not None:
        out["rho"] = fc.rho
    if fc.beta is not None:
        out["beta"] = fc.beta
    return out


def report_to_dict(report: VerificationReport, no_timing: bool = False) -> dict:
    prediction = report.prediction
    out = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify",
        "instance": _instance_dict(report.curve, report.l),
        "trace": report.trace,
        "point_count": report.point_count,
        "psi_degree": report.psi_degree,
        "class": _class_dict(report.frob),
        "predicted": None
        if prediction.out_of_scope
        else prediction.pattern.as_lists(),
        "out_of_scope": prediction.out_of_scope,
        "empirical": report.empirical.as_lists(),
        "match": report.match,
    }
    if prediction.note:
        out["note"] = prediction.note
    if prediction.uncorrected_entries is not None:
        out["uncorrected"] = {
            "label": "regression demo: lcm halved for every even pair",
            "pattern": [[d, c] for d, c in prediction.uncorrected_entries],
            "differs": True,
        }
    if report.oracle is not None:
        oracle = dict(report.oracle)
        oracle["conjugacy"] = {
            "kind": oracle["conjugacy"]["kind"],
            "eigenvalues": list(oracle["conjugacy"]["eigenvalues"]),
            "canonical": [list(r) for r in oracle["conjugacy"]["canonical"]],
            "transform": [list(r) for r in oracle["conjugacy"]["transform"]],
        }
        out["oracle"] = oracle
    if report.timings and not no_timing:
        out["timings"] = report.timings
    return out


def _report_text(data: dict) -> str:
    lines = []
    inst = data["instance"]
    lines.append(
        f"curve y^2 = x^3 + {inst['a']}x + {inst['b']} over "
        f"GF({inst['p']}{'^' + str(inst['m']) if inst['m'] > 1 else ''}), "
        f"l = {inst['l']}"
    )
    lines.append(f"points: {data['point_count']}, trace: {data['trace']}")
    cls = data["class"]
    desc = f"class: {cls['kind']} (alpha={cls['alpha']}"
    if "rho" in cls:
        desc += f", rho={cls['rho']}"
    if "beta" in cls:
        desc += f", beta={cls['beta']}"
    lines.append(desc + ")")
    if data["out_of_scope"]:
        lines.append(f"predicted: {data.get('note', 'out of scope')}")
    else:
        lines.append(f"predicted: {_fmt_pattern(data['predicted'])}")
    lines.append(f"empirical: {_fmt_pattern(data['empirical'])}")
    if data["match"] is not None:
        lines.append(f"match: {data['match']}")
    if "uncorrected" in data:
        lines.append(
            f"uncorrected-rule pattern ({data['uncorrected']['label']}): "
            f"{_fmt_pattern(data['uncorrected']['pattern'])} [differs]"
        )
    if "oracle" in data:
        o = data["oracle"]
        lines.append(
            f"oracle: splitting degree {o['splitting_degree']}, "
            f"basis field degree {o['basis_field_degree']}, "
            f"matrix {o['matrix']}, conjugacy {o['conjugacy']['kind']} "
            f"{o['conjugacy']['canonical']}"
        )
        lines.append(
            f"oracle orbit degrees: P={o['basis_orbit_degrees']['P']} "
            f"Q={o['basis_orbit_degrees']['Q']} "
            f"P+Q={o['basis_orbit_degrees']['P+Q']}; "
            f"orbit pattern {_fmt_pattern(o['orbit_pattern'])}"
        )
    return "\n".join(lines)


def _fmt_pattern(pairs) -> str:
    return "(" + ",".join(f"({d},{c})" for d, c in pairs) + ")"


def _emit(data: dict, args) -> None:
    plain = data.pop("_text", "")
    if args.json:
        text = json.dumps(data, indent=2, sort_keys=True)
    else:
        text = plain
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands -------------------------------------------------------------


def cmd_verify(args) -> int:
    curve = _build_curve(args)
    _check_l(args.l, args.p)
    report = verify(
        curve,
        args.l,
        seed=args.seed,
        with_oracle=args.oracle,
        collect_timings=not args.no_timing,
    )
    data = report_to_dict(report, no_timing=args.no_timing)
    data["_text"] = _report_text(data)
    _emit(data, args)
    if report.match is False:
        return 2
    return 0


def cmd_oracle(args) -> int:
    curve = _build_curve(args)
    _check_l(args.l, args.p)
    try:
        report = oracle_report(curve, args.l, seed=args.seed)
    except OracleError as exc:
        raise UsageError(str(exc)) from exc
    data = {
        "schema_version": SCHEMA_VERSION,
        "kind": "oracle",
        "instance": _instance_dict(curve, args.l),
        "oracle": report,
    }
    data["oracle"]["orbit_pattern"] = [list(e) for e in report["orbit_pattern"]]
    data["oracle"]["matrix"] = [list(r) for r in report["matrix"]]
    conj = report["conjugacy"]
    data["oracle"]["conjugacy"] = {
        "kind": conj["kind"],
        "eigenvalues": list(conj["eigenvalues"]),
        "canonical": [list(r) for r in conj["canonical"]],
        "transform": [list(r) for r in conj["transform"]],
    }
    lines = [
        f"splitting degree: {report['splitting_degree']}",
        f"basis field degree: {report['basis_field_degree']}",
        f"frobenius matrix mod {args.l}: {data['oracle']['matrix']}",
        f"conjugacy: {conj['kind']} canonical {data['oracle']['conjugacy']['canonical']}",
        f"orbit degrees: {report['basis_orbit_degrees']}",
        f"orbit pattern: {_fmt_pattern(report['orbit_pattern'])}",
    ]
    data["_text"] = "\n".join(lines)
    _emit(data, args)
    return 0


def cmd_scan(args) -> int:
    l_set = _parse_vector(args.l_set)
    for l in l_set:
        if l % 2 == 0 or not isprime(l):
            raise UsageError(f"l-set entries must be odd primes, got {l}")
    result = scan(
        args.p_min,
        args.p_max,
        l_set,
        quota=args.quota,
        seed=args.seed,
        keep_records=False,
    )
    witnesses = {
        kind: report_to_dict(result.witnesses[kind], no_timing=True)
        for kind in sorted(result.witnesses)
    }
    data = {
        "schema_version": SCHEMA_VERSION,
        "kind": "scan",
        "config": {
            "p_min": args.p_min,
            "p_max": args.p_max,
            "l_set": sorted(set(l_set)),
            "quota": args.quota,
            "seed": args.seed,
        },
        "attempted": result.attempted,
        "tallies": dict(sorted(result.tallies.items())),
        "mismatches": [
            {"p": r.p, "a": r.a, "b": r.b, "l": r.l, "kind": r.kind}
            for r in result.mismatches
        ],
        "witnesses": witnesses,
        "missing_kinds": result.missing_kinds,
        "errors": [
            {"p": r.p, "a": r.a, "b": r.b, "l": r.l, "error": r.error}
            for r in result.errors
        ],
    }
    lines = [
        f"scanned {result.attempted} instances over p in "
        f"[{args.p_min}, {args.p_max}], l in {sorted(set(l_set))}",
        "tallies: "
        + ", ".join(f"{k}={v}" for k, v in sorted(result.tallies.items())),
        f"mismatches: {len(result.mismatches)}",
    ]
    if result.missing_kinds:
        lines.append(
            "classes with no instance in range: " + ", ".join(result.missing_kinds)
        )
    else:
        lines.append("all five Frobenius classes witnessed")
    for kind in sorted(result.witnesses):
        w = result.witnesses[kind]
        lines.append(
            f"witness[{kind}]: p={w.curve.field.characteristic} "
            f"a={w.curve.a.rep} b={w.curve.b.rep} l={w.l} "
            f"empirical={w.empirical}"
        )
    if result.errors:
        lines.append(f"errors: {len(result.errors)} (recorded and skipped)")
    data["_text"] = "\n".join(lines)
    _emit(data, args)
    return 2 if result.mismatches else 0


def cmd_factor(args) -> int:
    field = _build_field(args.p, args.m)
    coeffs = _parse_vector(args.coeffs)
    if args.m > 1:
        raise UsageError(
            "factor over extension base fields takes prime-subfield "
            "coefficients only; pass m = 1 coefficients"
        )
    poly = Polynomial(field, coeffs)
    if poly.degree < 1:
        raise UsageError("input polynomial must have degree >= 1")
    fz = factor(poly, seed=args.seed)
    pattern = pattern_of(fz)
    data = {
        "schema_version": SCHEMA_VERSION,
        "kind": "factor",
        "field": {"p": args.p, "m": args.m},
        "input": [int(c) for c in poly.coeffs],
        "lead": int(fz.lead.rep),
        "factors": [
            {"coeffs": [int(c) for c in poly.coeffs], "multiplicity": mult}
            for poly, mult in fz.factors
        ],
        "pattern": pattern.as_lists(),
    }
    lines = [f"degree {poly.degree} over GF({args.p}): lead {data['lead']}"]
    for item in data["factors"]:
        lines.append(f"  factor {item['coeffs']} ^ {item['multiplicity']}")
    lines.append(f"pattern: {pattern}")
    data["_text"] = "\n".join(lines)
    _emit(data, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divpattern",
        description="Predict and verify factorization patterns of division "
        "polynomials of elliptic curves over finite fields.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--out", help="write the report to this path")
        sp.add_argument(
            "--no-timing", action="store_true", help="omit timing fields"
        )

    def add_instance(sp):
        sp.add_argument("--p", type=int, required=True, help="characteristic")
        sp.add_argument("--m", type=int, default=1, help="base extension degree")
        sp.add_argument("--a", required=True, help="curve coefficient a")
        sp.add_argument("--b", required=True, help="curve coefficient b")

    sp = sub.add_parser("verify", help="predict and check one instance")
    add_instance(sp)
    sp.add_argument("--l", type=int, required=True, help="odd torsion prime")
    sp.add_argument("--oracle", action="store_true", help="attach an oracle run")
    add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="sweep curves over a prime range")
    sp.add_argument("--p-min", type=int, default=5)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--l-set", default="3,5,7", help="comma-separated odd primes")
    sp.add_argument(
        "--quota",
        type=int,
        default=10,
        help="out-of-scope verifications per class (in-scope is exhaustive)",
    )
    add_common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("oracle", help="explicit torsion-basis run")
    add_instance(sp)
    sp.add_argument("--l", type=int, required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("factor", help="factor a polynomial over GF(p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument(
        "--coeffs", required=True, help="comma-separated, constant term first"
    )
    add_common(sp)
    sp.set_defaults(func=cmd_factor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
