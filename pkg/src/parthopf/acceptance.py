"""The thirteen acceptance criteria as executable checks.

Each criterion returns a :class:`Report`; ``run_acceptance`` runs a chosen
subset with one shared cache of built pairs and bismash products.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .bismash import bismash, bismash_alt, compare_constructions, theta_iso
from .exactmath import QQ, PrimeField
from .hopfcore import check_bialgebra, check_hopf, fingerprint_compare, mutate, solve_antipode
from .matchedpair import antipode_subidentities, check_lambda_z_pair, check_pmp, lambda_z_predicates
from .report import CheckRefused, Report
from .structure import check_integral_product, semisimplicity_equivalence
from .zoo import (
    NEGATIVE_BLAME,
    acceptance_hopf_zoo,
    find_zs,
    h4_tensor_a22,
    h4_tensor_h4,
    lambda_z_sweep,
    negative_completion_sweep,
    pair_subgroup_indicator,
    pair_normal_average,
    pair_a22,
    pair_h4_negative,
    positive_pairs,
    sweep_pool,
)

BETAS = (0, 1, -1, 2, -2)


@dataclass
class Context:
    seed: int = 0
    pairs: list | None = None
    built: dict = dc_field(default_factory=dict)

    def positive(self) -> list:
        if self.pairs is None:
            self.pairs = positive_pairs()
        return self.pairs

    def bis(self, p):
        if p.name not in self.built:
            self.built[p.name] = bismash(p)
        return self.built[p.name]

    def by_prefix(self, prefix: str):
        return [p for p in self.positive() if p.name.startswith(prefix)]


def _one(ctx: Context, name: str):
    for p in ctx.positive():
        if p.name == name:
            return p
    raise KeyError(name)


def c1_axiom_suite(ctx: Context) -> Report:
    rep = Report("axiom-suite soundness and sensitivity")
    rng = random.Random(ctx.seed)
    for name, B in acceptance_hopf_zoo():
        r = check_hopf(B)
        rep.add(f"{name} passes", "check_hopf with zero failures", r.passed,
                None if r.passed else {"first failure": r.first_failure().name})
        missed = []
        for _ in range(20):
            M, what = mutate(B, rng)
            if check_hopf(M, stop_on_fail=True).passed:
                missed.append(what)
        rep.add(f"{name} mutations caught", "20 single-constant mutations each fail", not missed,
                {"missed": missed} if missed else None)
    return rep


def _random_valid_zs(F, n: int, rng: random.Random, tries: int = 200_000) -> list:
    pool = sweep_pool(F)
    algebras = [B for B, _, _ in pool.values() if B.dim <= 4]
    from .partial import z_condition_failure

    vals = [F(v) for v in range(F.characteristic)]
    out = []
    for _ in range(tries):
        B = rng.choice(algebras)
        z = {i: x for i in range(B.dim) for x in [rng.choice(vals)] if x}
        if z_condition_failure(B, z) is None:
            out.append((B, z))
            if len(out) == n:
                break
    return out


def c2_z_idempotent(ctx: Context) -> Report:
    rep = Report("valid z are idempotent")
    found = []
    for p in ctx.positive():
        if p.is_lambda_z:
            found.append((p.L, p.meta["z"], p.name))
    for name, (B, _, zs) in sweep_pool(QQ).items():
        found += [(B, z, f"{name} search") for z in zs]
    bad = [f"{n}: {B.format_vector(z)}" for B, z, n in found if B.product(z, z) != z]
    rep.add("zoo z", "z² = z", not bad, {"failures": bad} if bad else None, detail=f"{len(found)} elements")
    F = PrimeField(5)
    rng = random.Random(ctx.seed)
    sample = _random_valid_zs(F, 100, rng)
    bad = [B.format_vector(z) for B, z in sample if B.product(z, z) != z]
    rep.add("100 random valid z over GF(5)", "z² = z", len(sample) == 100 and not bad,
            {"found": len(sample), "failures": bad} if (bad or len(sample) < 100) else None)
    return rep


def _iff_report(ctx: Context, title: str, which: str) -> Report:
    rep = Report(title)
    line = "quasi-abelian iff agrees" if which == "lemma" else "pmp iff agrees"
    named = [pair_a22(), pair_subgroup_indicator(), pair_normal_average(), pair_normal_average("S3", "e,(123),(132)")]
    for p in named:
        v = check_lambda_z_pair(p.H, p.L, p.meta["lambda"], p.meta["z"])
        r = v.report.get(line)
        rep.add(f"{p.name}", r.anchor, r.passed, r.witness)
    attr = "lemma_prediction" if which == "lemma" else "prop_prediction"
    for F in (QQ, PrimeField(5)):
        sw = lambda_z_sweep(F, 100, seed=ctx.seed)
        agrees = sw.lemma_agrees() if which == "lemma" else sw.prop_agrees()
        rep.add(f"sweep over {F.name}", "agreement in both directions on 100 candidates", agrees,
                None if agrees else {"disagreeing": [vars(r) for r in sw.records if not
                                                     (r.lemma_agrees if which == "lemma" else r.prop_agrees)][:3]},
                detail=f"{len(sw.valid)} valid, {len(sw.invalid)} invalid")
        rep.add(f"sweep over {F.name} sees both outcomes", "the predicate is true and false on some valid candidates",
                sw.sees_both(attr))
    return rep


def c3_lemma_iff(ctx: Context) -> Report:
    return _iff_report(ctx, "quasi-abelian characterization of λ/z pairs", "lemma")


def c4_prop_iff(ctx: Context) -> Report:
    return _iff_report(ctx, "pmp characterization of λ/z pairs", "prop")


def c5_bialgebra(ctx: Context) -> Report:
    rep = Report("bismash products are bialgebras")
    for p in ctx.positive():
        b = ctx.bis(p)
        r = check_bialgebra(b.result)
        rep.add(f"{p.name}", "full bialgebra verification of L#̲‾H", r.passed and b.report.passed,
                None if r.passed and b.report.passed else {"failures": [x.name for x in (r.failures() + b.report.failures())]},
                detail=f"dim {b.result.dim}")
    return rep


def c6_antipode(ctx: Context) -> Report:
    rep = Report("closed-form antipode")
    for p in ctx.positive():
        b = ctx.bis(p)
        B = b.result
        ok = B.antipode is not None and b.antipode_source == "closed form"
        conv = ok and b.report.ok("result: S * id = uε") and b.report.ok("result: id * S = uε")
        same = ok and solve_antipode(B) == B.antipode
        rep.add(f"{p.name} convolution identities", "m(S⊗id)Δ = uε = m(id⊗S)Δ", conv)
        rep.add(f"{p.name} matches solver", "closed-form S = solver S", same)
        if p.is_lambda_z:
            sub = antipode_subidentities(p)
            for r in sub.results:
                rep.add(f"{p.name} {r.name}", r.anchor, r.passed, r.witness)
    return rep


def _cli_exit_code(p) -> int:
    from .cli.main import run_check
    from .cli.serialize import pair_doc

    code, _ = run_check(pair_doc(p), "pmp")
    return code


def c7_negative(ctx: Context) -> Report:
    rep = Report("negative control on H4")
    for mode in ("lambda", "z"):
        for beta in BETAS:
            p = pair_h4_negative(beta, mode)
            r = check_pmp(p)
            H, L = p.H, p.L
            preds = lambda_z_predicates(H, L, p.meta["lambda"], p.meta["z"])
            blamed = NEGATIVE_BLAME[mode]
            rep.add(f"{mode} β={beta} fails pmp", "pmp fails", not r.passed,
                    None if not r.passed else {"unexpected": "pmp passed"},
                    detail=f"first failure: {r.first_failure().name} at {r.first_failure().witness}" if not r.passed else "")
            rep.add(f"{mode} β={beta} blamed item fails", blamed, not preds[blamed][0], preds[blamed][1])
            code = _cli_exit_code(p)
            rep.add(f"{mode} β={beta} check exits 1", "exit code 1", code == 1, {"exit": code} if code != 1 else None)
            res = negative_completion_sweep(beta, mode, n=50, seed=ctx.seed + beta + (0 if mode == "lambda" else 100))
            rescued = [d for d, ok in res if ok]
            rep.add(f"{mode} β={beta} no completion", "50 random counterparts, none passes", not rescued,
                    {"rescued by": rescued} if rescued else None)
    return rep


def c8_fingerprints(ctx: Context) -> Report:
    rep = Report("dimension and fingerprint reproduction")
    for name, target, dim in (("pair_a22", h4_tensor_h4(), 16), ("pair_a4prime", h4_tensor_a22(), 32)):
        b = ctx.bis(_one(ctx, name))
        rep.add(f"{name} dimension", f"dim = {dim}", b.result.dim == dim, {"dim": b.result.dim})
        fc = fingerprint_compare(b.result, target)
        rep.add(f"{name} fingerprint", f"fingerprint equals {target.name}", fc.passed,
                None if fc.passed else {"mismatch": [r.name for r in fc.failures()]})
        rep.notes.extend(n for n in fc.notes if n not in rep.notes)
    return rep


def c9_integrals(ctx: Context) -> Report:
    rep = Report("integral of the bismash product")
    for p in ctx.by_prefix("pair_subgroup_indicator") + ctx.by_prefix("pair_normal_average(C4"):
        r = check_integral_product(ctx.bis(p))
        rep.extend(r, f"{p.name}: ")
    return rep


def c10_semisimple(ctx: Context) -> Report:
    rep = Report("semisimplicity equivalence")
    cases = [
        ("Q, N = {e,c2}", ctx.by_prefix("pair_normal_average(C4")[0], True),
        ("GF(3), N = {e,c2}", pair_normal_average("C4", "e,c2", F=PrimeField(3)), None),
        ("GF(2), N = {e}", pair_normal_average("C4", "e", F=PrimeField(2)), None),
    ]
    for label, p, expect in cases:
        b = ctx.bis(p) if p in ctx.positive() else bismash(p, derived=False)
        r = semisimplicity_equivalence(b)
        rep.extend(r, f"{label}: ")
        if expect is not None:
            truth = r.notes[-1]
            allt = "result True, L True, left True, right True" in truth
            rep.add(f"{label}: all three true", "semisimple result, semisimple L, λ(∫) ≠ 0", allt, {"values": truth})
    try:
        pair_normal_average("C4", "e,c2", F=PrimeField(2))
        refused = False
    except CheckRefused as e:
        refused = "characteristic" in str(e)
    rep.add("GF(2), N = {e,c2} rejected", "char ∤ |N| is required", refused)
    return rep


def c11_theta(ctx: Context) -> Report:
    rep = Report("duality isomorphism")
    for p in ctx.by_prefix("pair_subgroup_indicator") + ctx.by_prefix("pair_normal_average(C4"):
        t = theta_iso(p)
        for r in t.report.results:
            if r.name.startswith("θ"):
                rep.add(f"{p.name}: {r.name}", r.anchor, r.passed, r.witness)
        prereq = [r.name for r in t.report.failures() if not r.name.startswith("θ")]
        rep.add(f"{p.name}: both sides verified", "mirrored bismash and dual of bismash are Hopf algebras",
                not prereq, {"failures": prereq} if prereq else None)
    return rep


def c12_alternate(ctx: Context) -> Report:
    rep = Report("construction order does not matter")
    for p in ctx.positive():
        a = bismash_alt(p)
        c = compare_constructions(ctx.bis(p), a)
        rep.add(f"{p.name}", "im(ΠE) = im(EΠ) with equal structure constants", c.passed and a.report.passed,
                None if c.passed and a.report.passed else {"failures": [r.name for r in c.failures() + a.report.failures()]})
    return rep


PINNED_LEFT_COUNIT = {"c": "e#̲p_e", "lhs": "(1/2)e#̲p_e + (1/2)c2#̲p_e", "rhs": "e#̲p_e"}


def c13_one_sided(ctx: Context) -> Report:
    rep = Report("one-sided counit on L#̲H")
    b = ctx.bis(ctx.by_prefix("pair_normal_average(C4")[0])
    rep.add("right counit holds", "(id⊗ε)Δ = id on L#̲H", b.report.ok("L#̲H right counit"))
    left = b.extras["stage1_left_counit"]
    rep.add("left counit fails", "(ε⊗id)Δ ≠ id on L#̲H", not left.passed, left.witness)
    rep.add("pinned witness", "failure at e#̲p_e", left.witness == PINNED_LEFT_COUNIT,
            {"got": left.witness, "pinned": PINNED_LEFT_COUNIT})
    return rep


CRITERIA: dict[int, tuple[str, Callable[[Context], Report]]] = {
    1: ("axiom-suite soundness", c1_axiom_suite),
    2: ("valid z are idempotent", c2_z_idempotent),
    3: ("quasi-abelian λ/z characterization", c3_lemma_iff),
    4: ("pmp λ/z characterization", c4_prop_iff),
    5: ("bismash bialgebras", c5_bialgebra),
    6: ("closed-form antipode", c6_antipode),
    7: ("negative control on H4", c7_negative),
    8: ("dimensions and fingerprints", c8_fingerprints),
    9: ("bismash integrals", c9_integrals),
    10: ("semisimplicity equivalence", c10_semisimple),
    11: ("duality isomorphism θ", c11_theta),
    12: ("construction order", c12_alternate),
    13: ("one-sided counit on L#̲H", c13_one_sided),
}


@dataclass
class CriterionOutcome:
    number: int
    title: str
    report: Report
    seconds: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.report.passed

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f" ({self.error})" if self.error else ""
        return f"[{mark}] criterion {self.number:2d}: {self.title}{extra}"


def run_criterion(n: int, ctx: Context | None = None) -> CriterionOutcome:
    ctx = ctx if ctx is not None else Context()
    title, fn = CRITERIA[n]
    t0 = time.perf_counter()
    try:
        rep = fn(ctx)
        err = None
    except Exception as e:  # a crash is a failure of the criterion, reported as such
        rep = Report(title)
        rep.add("completed", "criterion ran to completion", False, {"error": f"{type(e).__name__}: {e}"})
        err = f"{type(e).__name__}: {e}"
    return CriterionOutcome(n, title, rep, time.perf_counter() - t0, err)


def run_acceptance(criteria=None, seed: int = 0) -> list[CriterionOutcome]:
    ctx = Context(seed=seed)
    return [run_criterion(n, ctx) for n in (criteria or sorted(CRITERIA))]
