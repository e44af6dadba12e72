"""Command-line driver.  Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or usage."""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib.metadata import PackageNotFoundError, version

from ..bismash import bismash, bismash_alt, compare_constructions, theta_iso
from ..exactmath import QQ, parse_field
from ..hopfcore import check_hopf, dual_hopf, fingerprint, fingerprint_compare
from ..matchedpair import (
    check_antipode_conditions,
    check_lambda_z_pair,
    check_mirrored_pair,
    check_pmp,
    check_quasi_abelian,
    dual_pair,
)
from ..partial import check_partial_action, check_partial_coaction
from ..report import CheckRefused, Report
from ..structure import check_integral_product, is_semisimple, left_integrals, right_integrals, semisimplicity_equivalence
from ..zoo import HOPF_NAMES, PAIR_NAMES, build_hopf, build_pair
from .serialize import SchemaError, dumps, hopf_doc, hopf_from_doc, load, pair_doc, pair_from_doc

SUITES = ("hopf", "action", "coaction", "pmp", "all")


class UsageError(ValueError):
    pass


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


def report_document(reports: list[Report], inputs: list, timing: bool = True, extra: dict | None = None) -> dict:
    checks = []
    notes = []
    for r in reports:
        for c in r.results:
            d = c.as_dict(timing)
            d["check"] = f"{r.title}: {c.name}" if r.title else c.name
            checks.append(d)
        notes.extend(r.notes)
    doc = {
        "schema_version": 1,
        "kind": "report",
        "tool": "parthopf",
        "version": tool_version(),
        "inputs": inputs,
        "pass": all(c["pass"] for c in checks),
        "checks": checks,
        "notes": notes,
    }
    if extra:
        doc.update(extra)
    return doc


def _emit(doc: dict) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def _write(path: str | None, doc: dict) -> None:
    text = dumps(doc) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# suites ---------------------------------------------------------------------------

def _pair_prereq(p) -> list[Report]:
    ra = check_partial_action(p.action)
    rc = check_partial_coaction(p.coaction)
    ra.title, rc.title = "action", "coaction"
    return [ra, rc]


def run_check(doc: dict, suite: str) -> tuple[int, list[Report]]:
    """Run a suite on a decoded document; returns (exit code, reports)."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    reps: list[Report] = []
    if doc["kind"] == "hopf":
        if suite not in ("hopf", "all"):
            raise UsageError(f"suite {suite!r} needs a pair file")
        B = hopf_from_doc(doc)
        reps.append(check_hopf(B))
    else:
        p = pair_from_doc(doc)
        if suite in ("hopf", "all"):
            reps += [check_hopf(p.H, Report("H")), check_hopf(p.L, Report("L"))]
        if suite in ("action", "coaction", "pmp", "all"):
            pre = _pair_prereq(p)
            if suite == "action":
                reps.append(pre[0])
            elif suite == "coaction":
                reps.append(pre[1])
            else:
                reps += pre
                if all(r.passed for r in pre):
                    reps.append(check_pmp(p, Report("pmp")))
                    if suite == "all":
                        reps.append(check_quasi_abelian(p, Report("quasi-abelian")))
                        if p.flags.get("pmp_ok") and p.flags.get("quasi_abelian_ok") and p.H.antipode and p.L.antipode:
                            reps.append(check_antipode_conditions(p, Report("antipode conditions")))
                        if p.is_lambda_z:
                            reps.append(check_lambda_z_pair(p.H, p.L, p.meta["lambda"], p.meta["z"]).report)
    return (0 if all(r.passed for r in reps) else 1), reps


def _load_pair(path: str):
    doc = load(path)
    if doc["kind"] != "pair":
        raise UsageError(f"{path} is a Hopf algebra file; a pair file is needed")
    return pair_from_doc(doc)


def _load_hopf(path: str):
    doc = load(path)
    if doc["kind"] != "hopf":
        raise UsageError(f"{path} is a pair file; a Hopf algebra file is needed")
    return hopf_from_doc(doc)


def _prereq_pmp(p) -> tuple[bool, list[Report]]:
    pre = _pair_prereq(p)
    if not all(r.passed for r in pre):
        return False, pre
    pre.append(check_pmp(p, Report("pmp")))
    pre.append(check_quasi_abelian(p, Report("quasi-abelian")))
    return all(r.passed for r in pre), pre


# commands -------------------------------------------------------------------------

def cmd_zoo(args) -> int:
    print("Hopf algebras (build NAME):")
    for n in HOPF_NAMES:
        print(f"  {n}")
    print("  (G is one of Cn, Dn, S3, S4, C2xC2)")
    print("Partial matched pairs:")
    for n in PAIR_NAMES:
        print(f"  {n}")
    return 0


def cmd_build(args) -> int:
    F = parse_field(args.field) if args.field else None
    if args.name in PAIR_NAMES:
        params = {
            "pair_subgroup_indicator": dict(G=args.group, N=args.normal, G2=args.group2, N2=args.normal2),
            "pair_normal_average": dict(G=args.group, N=args.normal),
            "pair_adjoint": dict(G=args.group, N2=args.normal2, K=args.kernel),
            "pair_kGkG": dict(G=args.group, N=args.normal, K=args.kernel),
            "pair_a22": {},
            "pair_a4prime": {},
            "pair_h4_negative": dict(beta=args.beta, mode=args.mode),
        }[args.name]
        p = build_pair(args.name, F, **params)
        _write(args.output, pair_doc(p))
        return 0
    B = build_hopf(args.name, F or QQ)
    _write(args.output, hopf_doc(B, {"built_from": args.name}))
    return 0


def cmd_check(args) -> int:
    doc = load(args.file)
    code, reps = run_check(doc, args.suite)
    _emit(report_document(reps, [{"file": args.file, "kind": doc["kind"], "suite": args.suite}], not args.no_timing))
    return code


def cmd_bismash(args) -> int:
    p = _load_pair(args.pairfile)
    ok, pre = _prereq_pmp(p)
    inputs = [{"file": args.pairfile, "pair": p.name}]
    if not ok:
        _emit(report_document(pre, inputs, not args.no_timing))
        return 1
    b = bismash_alt(p) if args.alt else bismash(p)
    prov = {
        "construction": "bismash (Π after E)" if not args.alt else "bismash (E after Π)",
        "pair": p.name,
        "antipode": b.antipode_source,
        "ambient_basis": [[k, i, b.result.field.encode(c)] for k, v in enumerate(b.sub.basis) for i, c in sorted(v.items())],
        "checks": b.report.as_dict(timing=False),
    }
    if args.output:
        _write(args.output, hopf_doc(b.result, prov))
    _emit(report_document(pre + [b.report], inputs, not args.no_timing, {"dim": b.result.dim}))
    return 0 if b.report.passed else 1


def cmd_fingerprint(args) -> int:
    B = _load_hopf(args.file)
    _emit({"schema_version": 1, "kind": "fingerprint", "input": args.file, "name": B.name,
           "fingerprint": fingerprint(B).as_dict()})
    return 0


def cmd_compare(args) -> int:
    A, B = _load_hopf(args.file_a), _load_hopf(args.file_b)
    r = fingerprint_compare(A, B)
    doc = report_document([r], [{"file": args.file_a}, {"file": args.file_b}], not args.no_timing)
    doc["verdict"] = "fingerprints equal" if r.passed else "fingerprints differ"
    _emit(doc)
    print(doc["verdict"], file=sys.stderr)
    return 0 if r.passed else 1


def cmd_integrals(args) -> int:
    doc = load(args.file)
    if doc["kind"] == "hopf":
        B = hopf_from_doc(doc)
        rep = check_hopf(B)
        if not rep.passed:
            _emit(report_document([rep], [{"file": args.file}], not args.no_timing))
            return 1
        F = B.field
        out = {"schema_version": 1, "kind": "integrals", "input": args.file,
               "left": [B.format_vector(v) for v in left_integrals(B).basis],
               "right": [B.format_vector(v) for v in right_integrals(B).basis],
               "semisimple": is_semisimple(B)}
        _emit(out)
        return 0
    p = pair_from_doc(doc)
    ok, pre = _prereq_pmp(p)
    if not ok:
        _emit(report_document(pre, [{"file": args.file}], not args.no_timing))
        return 1
    b = bismash(p)
    reps = pre + [b.report]
    try:
        reps.append(check_integral_product(b))
    except CheckRefused as e:
        r = Report("integral of the bismash product")
        r.add("prerequisites", "antipode present", False, {"refused": str(e)})
        reps.append(r)
    if p.is_lambda_z:
        reps.append(semisimplicity_equivalence(b))
    d = report_document(reps, [{"file": args.file}], not args.no_timing)
    _emit(d)
    return 0 if d["pass"] else 1


def cmd_dualize(args) -> int:
    doc = load(args.file)
    if doc["kind"] == "hopf":
        B = hopf_from_doc(doc)
        rep = check_hopf(B)
        if not rep.passed:
            _emit(report_document([rep], [{"file": args.file}], not args.no_timing))
            return 1
        _write(args.output, hopf_doc(dual_hopf(B), {"dual_of": B.name}))
        return 0
    p = pair_from_doc(doc)
    ok, pre = _prereq_pmp(p)
    if not ok:
        _emit(report_document(pre, [{"file": args.file}], not args.no_timing))
        return 1
    mp = dual_pair(p)
    r = check_mirrored_pair(mp)
    if args.output:
        _write(args.output, pair_doc(mp.reflected()))
    d = report_document(pre + [r], [{"file": args.file}], not args.no_timing)
    _emit(d)
    return 0 if d["pass"] else 1


def cmd_theta(args) -> int:
    p = _load_pair(args.pairfile)
    ok, pre = _prereq_pmp(p)
    if not ok:
        _emit(report_document(pre, [{"file": args.pairfile}], not args.no_timing))
        return 1
    try:
        t = theta_iso(p)
    except CheckRefused as e:
        reps = pre + ([e.report] if e.report is not None else [])
        r = Report("duality isomorphism")
        r.add("prerequisites", "θ needs a Hopf bismash on both sides", False, {"refused": str(e)})
        _emit(report_document(reps + [r], [{"file": args.pairfile}], not args.no_timing))
        return 1
    d = report_document(pre + [t.report], [{"file": args.pairfile}], not args.no_timing)
    _emit(d)
    return 0 if d["pass"] else 1


def cmd_verify_all(args) -> int:
    from ..acceptance import CRITERIA, Context, run_criterion

    crit = sorted(set(args.criteria)) if args.criteria else sorted(CRITERIA)
    bad = [c for c in crit if c not in CRITERIA]
    if bad:
        raise UsageError(f"unknown criteria {bad}; choose from 1..{len(CRITERIA)}")
    ctx = Context(seed=args.seed)
    outcomes = []
    t0 = time.perf_counter()
    for n in crit:
        o = run_criterion(n, ctx)
        outcomes.append(o)
        if not args.json:
            print(o.line() + ("" if args.no_timing else f"  [{o.seconds:.1f}s]"), flush=True)
    ok = all(o.passed for o in outcomes)
    if args.json:
        reps = []
        for o in outcomes:
            o.report.title = f"criterion {o.number}: {o.title}"
            reps.append(o.report)
        extra = {"criteria": [{"number": o.number, "title": o.title, "pass": o.passed} for o in outcomes],
                 "seed": args.seed}
        if not args.no_timing:
            extra["seconds"] = round(time.perf_counter() - t0, 2)
        _emit(report_document(reps, [{"command": "verify-all"}], not args.no_timing, extra))
    else:
        print(f"{sum(o.passed for o in outcomes)}/{len(outcomes)} criteria pass")
    return 0 if ok else 1


# parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parthopf", description="Exact verification of partial bismash products.")
    sub = ap.add_subparsers(dest="command", required=True)

    def timing(p):
        p.add_argument("--no-timing", action="store_true", help="omit per-check timings so output is byte-stable")

    sub.add_parser("zoo", help="list buildable names").set_defaults(func=cmd_zoo)

    b = sub.add_parser("build", help="write a Hopf algebra or pair file")
    b.add_argument("name")
    b.add_argument("--field", help="Q, Q(i), GF(p) (default Q; Q(i) for pair_a4prime)")
    b.add_argument("--group")
    b.add_argument("--normal", help="comma-separated subgroup elements, e.g. 'e,c2'")
    b.add_argument("--group2")
    b.add_argument("--normal2")
    b.add_argument("--kernel", help="normal subgroup averaged into z")
    b.add_argument("--beta")
    b.add_argument("--mode", choices=("lambda", "z"))
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", help="run a check suite; JSON report on stdout")
    c.add_argument("file")
    c.add_argument("--suite", default="all", choices=SUITES)
    timing(c)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("bismash", help="build L#̲‾H from a pair file")
    s.add_argument("pairfile")
    s.add_argument("-o", "--output")
    s.add_argument("--alt", action="store_true", help="apply the projections in the other order")
    timing(s)
    s.set_defaults(func=cmd_bismash)

    f = sub.add_parser("fingerprint", help="isomorphism invariants of a Hopf algebra file")
    f.add_argument("file")
    f.set_defaults(func=cmd_fingerprint)

    m = sub.add_parser("compare", help="compare fingerprints of two Hopf algebra files")
    m.add_argument("file_a")
    m.add_argument("file_b")
    timing(m)
    m.set_defaults(func=cmd_compare)

    i = sub.add_parser("integrals", help="integrals of a Hopf file, or integral results for a pair's bismash")
    i.add_argument("file")
    timing(i)
    i.set_defaults(func=cmd_integrals)

    d = sub.add_parser("dualize", help="dual Hopf algebra, or the dual pair of a pair file")
    d.add_argument("file")
    d.add_argument("-o", "--output")
    timing(d)
    d.set_defaults(func=cmd_dualize)

    t = sub.add_parser("theta", help="verify the duality isomorphism for a pair file")
    t.add_argument("pairfile")
    timing(t)
    t.set_defaults(func=cmd_theta)

    v = sub.add_parser("verify-all", help="run the acceptance criteria")
    v.add_argument("--json", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--criteria", type=int, nargs="*", help="subset of criterion numbers")
    timing(v)
    v.set_defaults(func=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return args.func(args)
    except (SchemaError, UsageError, KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
