"""The partial matched pairs of the examples, parameterized as stated there."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..exactmath import QQ, Field, QQi
from ..hopfcore import HopfData, coopposite
from ..matchedpair import PartialMatchedPair, lambda_z_pair
from ..partial import adjoint_pair
from ..report import CheckRefused
from .groups import GroupPresentation, cyclic, group_by_name
from .hopf import a4prime, a22, dual_group_algebra, group_algebra, h16, sweedler_h4


def _group(G) -> GroupPresentation:
    return group_by_name(G) if isinstance(G, str) else G


def _subgroup(G: GroupPresentation, S, what: str, normal: bool = False) -> tuple[int, ...]:
    if isinstance(S, str) and S.strip() in (G.name, "all", "G"):
        idx = tuple(range(G.order))
    else:
        idx = G.subset(S)
    if not G.is_subgroup(idx):
        raise CheckRefused(f"{what} = {{{', '.join(G.labels[i] for i in idx)}}} is not a subgroup of {G.name}")
    if normal and not G.is_normal(idx):
        raise CheckRefused(f"{what} = {{{', '.join(G.labels[i] for i in idx)}}} is not normal in {G.name}")
    return idx


def _invertible_order(F: Field, m: int, what: str) -> None:
    if F.characteristic and m % F.characteristic == 0:
        raise CheckRefused(f"the characteristic {F.characteristic} divides |{what}| = {m}")


def _average(F: Field, idx, n: int) -> dict:
    c = F.one / F(len(idx))
    return {i: c for i in idx} if n else {}


def _named(p: PartialMatchedPair, name: str, **extra) -> PartialMatchedPair:
    p.meta["name"] = name
    p.meta.update(extra)
    return p


def pair_subgroup_indicator(G="C2", N="e", G2="C2", N2="C2", F: Field = QQ) -> PartialMatchedPair:
    """kG′ acting on kG* through the indicator of N′; kG* coacting through z = Σ_{n∈N} p_n."""
    G, G2 = _group(G), _group(G2)
    Ni = _subgroup(G, N, "N")
    N2i = _subgroup(G2, N2, "N′")
    H, L = group_algebra(G2, F), dual_group_algebra(G, F)
    lam = {i: F.one for i in N2i}
    z = {i: F.one for i in Ni}
    p = lambda_z_pair(H, L, lam, z)
    return _named(p, f"pair_subgroup_indicator({G.name},{{{','.join(G.labels[i] for i in Ni)}}},{G2.name},{{{','.join(G2.labels[i] for i in N2i)}}})",
                  params={"G": G.name, "N": [G.labels[i] for i in Ni], "G2": G2.name, "N2": [G2.labels[i] for i in N2i]})


def pair_normal_average(G="C4", N="e,c2", F: Field = QQ) -> PartialMatchedPair:
    """kG* acting on kG via λ = (1/|N|)Σ_{n∈N} n; kG coacting with the same average as z."""
    G = _group(G)
    Ni = _subgroup(G, N, "N", normal=True)
    _invertible_order(F, len(Ni), "N")
    H, L = dual_group_algebra(G, F), group_algebra(G, F)
    avg = _average(F, Ni, G.order)
    p = lambda_z_pair(H, L, avg, avg)
    return _named(p, f"pair_normal_average({G.name},{{{','.join(G.labels[i] for i in Ni)}}})",
                  params={"G": G.name, "N": [G.labels[i] for i in Ni]})


def pair_adjoint(G="S3", N2="e,(12)", K="e,(123),(132)", F: Field = QQ) -> PartialMatchedPair:
    """(kG)^op acting on kG by h ⇀ a = S(h1)ah3λ(h2) and kG coacting by ρ(h) = h2⊗S(h1)zh3."""
    G = _group(G)
    N2i = _subgroup(G, N2, "N′")
    Ki = _subgroup(G, K, "K", normal=True)
    _invertible_order(F, len(Ki), "K")
    B = group_algebra(G, F)
    lam = {i: F.one for i in N2i}
    z = _average(F, Ki, G.order)
    pa, pc = adjoint_pair(B, lam, z)
    p = PartialMatchedPair(pa.hopf, B, pa, pc, meta={"kind": "adjoint", "lambda_data": lam, "z_data": z})
    return _named(p, f"pair_adjoint({G.name})", params={"G": G.name, "N2": [G.labels[i] for i in N2i],
                                                        "K": [G.labels[i] for i in Ki]})


def pair_kGkG(G="S3", N="e,(12)", K="e,(123),(132)", F: Field = QQ) -> PartialMatchedPair:
    """kG acting on kG through the indicator of N; z = (1/|K|)Σ_{k∈K} k with K normal."""
    G = _group(G)
    Ni = _subgroup(G, N, "N")
    Ki = _subgroup(G, K, "K", normal=True)
    _invertible_order(F, len(Ki), "K")
    B = group_algebra(G, F)
    p = lambda_z_pair(B, B, {i: F.one for i in Ni}, _average(F, Ki, G.order))
    return _named(p, f"pair_kGkG({G.name})", params={"G": G.name, "N": [G.labels[i] for i in Ni],
                                                     "K": [G.labels[i] for i in Ki]})


def pair_a22(F: Field = QQ) -> PartialMatchedPair:
    """A22 on itself: λ supported on {1, g}, z = (1 + gh)/2."""
    A = a22(F)
    half = F.one / F(2)
    p = lambda_z_pair(A, A, A.vec({"1": 1, "g": 1}), A.vec({"1": half, "gh": half}))
    return _named(p, "pair_a22")


def pair_a4prime(F: Field | None = None) -> PartialMatchedPair:
    """H16 acting on A4′ through the indicator of {1, h, g², g²h}; z = (1 + c²)/2 in A4′."""
    F = F if F is not None else QQi()
    H, L = h16(F), a4prime(F)
    half = F.one / F(2)
    p = lambda_z_pair(H, L, H.vec({"1": 1, "h": 1, "g2": 1, "g2h": 1}), L.vec({"1": half, "c2": half}))
    return _named(p, "pair_a4prime")


# negative control -------------------------------------------------------------

NEGATIVE_BLAME = {"lambda": "λ(h1)h2λ(h3) = λ(h1)h2", "z": "xz = zxz"}


def h4_negative_lambda(beta, F: Field = QQ) -> tuple[HopfData, dict]:
    """λ(1) = 1, λ(c) = 0, λ(x) = β, λ(xc) = -β on H4."""
    H = sweedler_h4(F)
    b = F(beta)
    return H, H.vec({"1": 1, "x": b, "xc": -b})


def h4_negative_z(beta, F: Field = QQ) -> tuple[HopfData, dict]:
    """z = 1/2 + c/2 + βxc, an idempotent coaction datum on H4 with Δx = 1⊗x + x⊗c."""
    H = coopposite(sweedler_h4(F))
    half = F.one / F(2)
    return H, H.vec({"1": half, "c": half, "xc": F(beta)})


def pair_h4_negative(beta=1, mode: str = "lambda", counterpart: HopfData | None = None,
                     other=None, F: Field = QQ) -> PartialMatchedPair:
    """The H4 data that can never complete to a partial matched pair.

    ``mode='lambda'`` puts λ on H4 and a z on ``counterpart`` (default kC2, z = 1);
    ``mode='z'`` puts z on H4 and a λ on ``counterpart`` (default kC2, λ = ε).
    """
    if mode not in NEGATIVE_BLAME:
        raise ValueError("mode must be 'lambda' or 'z'")
    C = counterpart if counterpart is not None else group_algebra(cyclic(2), F)
    if mode == "lambda":
        H, lam = h4_negative_lambda(beta, F)
        z = other if other is not None else dict(C.unit)
        p = lambda_z_pair(H, C, lam, z)
    else:
        L, z = h4_negative_z(beta, F)
        lam = other if other is not None else dict(C.counit)
        p = lambda_z_pair(C, L, lam, z)
    return _named(p, f"pair_h4_negative(beta={F.encode(F(beta))},{mode})", expected="fail",
                  blame=NEGATIVE_BLAME[mode], params={"beta": F.encode(F(beta)), "mode": mode})
