"""Finite searches for λ and z data, and the randomized λ/z sweeps."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

from ..exactmath import LinearMap, QQ, Field
from ..hopfcore import HopfData, coopposite, opposite
from ..matchedpair import check_lambda_z_pair, check_pmp
from ..partial import (
    PartialAction,
    PartialCoaction,
    check_partial_action,
    check_partial_coaction,
    is_central,
    lambda_commutes,
    lambda_condition_failure,
    z_condition_failure,
)
from ..report import CheckRefused
from .groups import cyclic, symmetric
from .hopf import dual_group_algebra, group_algebra, sweedler_h4

MAX_CANDIDATES = 200_000


def default_values(F: Field) -> list:
    vals = [F.zero, F.one, -F.one, F(2)]
    if F.characteristic != 2:
        vals.append(F.one / F(2))
    out = []
    for v in vals:
        if v not in out:
            out.append(v)
    return out


def _vectors(n: int, values):
    if len(values) ** n > MAX_CANDIDATES:
        raise ValueError(f"search space {len(values)}^{n} too large")
    for t in product(values, repeat=n):
        yield {i: x for i, x in enumerate(t) if x}


def find_lambdas(H: HopfData, values=None) -> list[dict]:
    """Every λ with coordinates in ``values`` satisfying the partial action criterion."""
    values = values if values is not None else default_values(H.field)
    return [v for v in _vectors(H.dim, values) if lambda_condition_failure(H, v) is None]


def find_zs(L: HopfData, values=None) -> list[dict]:
    """Every z with coordinates in ``values`` satisfying the partial coaction criterion."""
    values = values if values is not None else default_values(L.field)
    return [v for v in _vectors(L.dim, values) if z_condition_failure(L, v) is None]


def find_adjoint_data(H: HopfData, values=None) -> list[tuple[dict, dict]]:
    """(λ, z) meeting the hypotheses of the adjoint construction on H; empty when none exist."""
    if H.antipode is None:
        return []
    try:
        Hop = opposite(H)
    except ValueError:
        return []
    lams = [l for l in find_lambdas(Hop, values) if lambda_commutes(H, l)]
    zs = [z for z in find_zs(H, values) if is_central(H, z)]
    return [(l, z) for l in lams for z in zs]


# randomized sweep ---------------------------------------------------------------

def _subgroups(G):
    out = set()
    for a in range(G.order):
        for b in range(G.order):
            out.add(G.subgroup_generated((a, b)))
    return sorted(out)


@lru_cache(maxsize=None)
def sweep_pool(F: Field) -> dict:
    """Small Hopf algebras with their valid λ and z data (enumerated, or subgroup-built for kS3)."""
    S3 = symmetric(3)
    hs = {
        "kC2": group_algebra(cyclic(2), F),
        "kC3": group_algebra(cyclic(3), F),
        "kC2*": dual_group_algebra(cyclic(2), F),
        "H4": sweedler_h4(F),
        "H4^cop": coopposite(sweedler_h4(F)),
    }
    pool = {}
    for name, B in hs.items():
        pool[name] = (B, find_lambdas(B), find_zs(B))
    kS3 = group_algebra(S3, F)
    subs = _subgroups(S3)
    lams = [{i: F.one for i in S} for S in subs]
    zs = [{i: F.one / F(len(S)) for i in S} for S in subs if not (F.characteristic and len(S) % F.characteristic == 0)]
    pool["kS3"] = (kS3, lams, zs)
    return pool


@dataclass
class SweepRecord:
    H: str
    L: str
    lam: dict
    z: dict
    valid: bool
    lemma_prediction: bool | None = None
    prop_prediction: bool | None = None
    quasi_abelian_pmp: bool | None = None
    pmp: bool | None = None
    general_rejects_invalid: bool | None = None

    @property
    def lemma_agrees(self) -> bool:
        return self.valid is False or self.lemma_prediction == self.quasi_abelian_pmp

    @property
    def prop_agrees(self) -> bool:
        return self.valid is False or self.prop_prediction == self.pmp


@dataclass
class SweepResult:
    field: str
    seed: int
    records: list = dc_field(default_factory=list)

    @property
    def valid(self) -> list:
        return [r for r in self.records if r.valid]

    @property
    def invalid(self) -> list:
        return [r for r in self.records if not r.valid]

    def lemma_agrees(self) -> bool:
        return all(r.lemma_agrees for r in self.records) and all(r.general_rejects_invalid for r in self.invalid)

    def prop_agrees(self) -> bool:
        return all(r.prop_agrees for r in self.records) and all(r.general_rejects_invalid for r in self.invalid)

    def sees_both(self, attr: str) -> bool:
        vals = {getattr(r, attr) for r in self.valid}
        return vals == {True, False}


def _random_vector(rng: random.Random, n: int, values) -> dict:
    return {i: x for i in range(n) for x in [rng.choice(values)] if x}


def _raw_action(H: HopfData, L: HopfData, lam: dict) -> PartialAction:
    cols = [({a: lam[h]} if h in lam else {}) for h in range(H.dim) for a in range(L.dim)]
    return PartialAction(H, L.algebra, LinearMap(H.field, (H.dim, L.dim), (L.dim,), cols), "left")


def _raw_coaction(H: HopfData, L: HopfData, z: dict) -> PartialCoaction:
    cols = [{c * L.dim + k: x for k, x in z.items()} for c in range(H.dim)]
    return PartialCoaction(L, H.coalgebra, LinearMap(H.field, (H.dim,), (H.dim, L.dim), cols), "right")


def lambda_z_sweep(F: Field = QQ, n: int = 100, seed: int = 0, invalid_rate: float = 0.2) -> SweepResult:
    """``n`` random (H, L, λ, z) candidates; valid ones go through the characterization,
    invalid ones through the general partial action/coaction checkers, which must reject them."""
    rng = random.Random(seed)
    pool = sweep_pool(F)
    names = sorted(pool)
    values = default_values(F)
    out = SweepResult(F.name if hasattr(F, "name") else str(F), seed)
    while len(out.records) < n:
        hn, ln = rng.choice(names), rng.choice(names)
        if hn == "kS3" and ln == "kS3" and rng.random() < 0.7:
            continue
        H, lams, _ = pool[hn]
        L, _, zs = pool[ln]
        lam, z = rng.choice(lams), rng.choice(zs)
        if rng.random() < invalid_rate:
            if rng.random() < 0.5:
                lam = _random_vector(rng, H.dim, values)
            else:
                z = _random_vector(rng, L.dim, values)
        valid = lambda_condition_failure(H, lam) is None and z_condition_failure(L, z) is None
        rec = SweepRecord(hn, ln, lam, z, valid)
        if valid:
            v = check_lambda_z_pair(H, L, lam, z)
            rec.lemma_prediction, rec.prop_prediction = v.lemma_prediction, v.prop_prediction
            rec.quasi_abelian_pmp = v.pmp_ok and v.quasi_abelian_ok
            rec.pmp = v.pmp_ok
        else:
            rejected = True
            if lambda_condition_failure(H, lam) is not None:
                pa = _raw_action(H, L, lam)
                check_partial_action(pa)
                rejected = rejected and pa.flags.get("partial_ok") is False
            if z_condition_failure(L, z) is not None:
                pc = _raw_coaction(H, L, z)
                check_partial_coaction(pc)
                rejected = rejected and pc.flags.get("partial_ok") is False
            rec.general_rejects_invalid = rejected
        out.records.append(rec)
    return out


# negative completions -------------------------------------------------------------

def negative_completion_sweep(beta, mode: str, F: Field = QQ, n: int = 50, seed: int = 0) -> list[tuple[str, bool]]:
    """Pair the fixed H4 datum with ``n`` random valid data on the other side; returns (description, pmp_ok)."""
    from .pairs import pair_h4_negative

    rng = random.Random(seed)
    pool = sweep_pool(F)
    names = sorted(pool)
    out = []
    while len(out) < n:
        cn = rng.choice(names)
        C, lams, zs = pool[cn]
        other = rng.choice(zs if mode == "lambda" else lams)
        p = pair_h4_negative(beta, mode, counterpart=C, other=other, F=F)
        check_pmp(p, redundancy=False)
        out.append((f"{cn}:{C.format_vector(other)}", bool(p.flags.get("pmp_ok"))))
    return out
