"""Integrals, semisimplicity, and how both pass to bismash products."""
from __future__ import annotations

from dataclasses import dataclass

from ..exactmath import Subspace
from ..hopfcore import HopfData
from ..hopfcore.invariants import integral_basis
from ..partial import lambda_value
from ..report import CheckRefused, Report


@dataclass(frozen=True)
class IntegralSpace:
    side: str
    basis: tuple
    host: HopfData

    @property
    def dim(self) -> int:
        return len(self.basis)

    def generator(self) -> dict:
        if len(self.basis) != 1:
            raise ArithmeticError(f"{self.side} integral space of {self.host.name} has dimension {len(self.basis)}, not 1")
        return self.basis[0]

    def contains(self, v: dict) -> bool:
        return Subspace.span(self.host.field, self.host.dim, list(self.basis)).contains(v)


def _integrals(B: HopfData, side: str) -> IntegralSpace:
    sp = IntegralSpace(side, tuple(integral_basis(B, side)), B)
    if sp.dim != 1:
        raise ArithmeticError(f"{B.name}: {side} integrals span dimension {sp.dim}; a finite-dimensional Hopf algebra has exactly 1")
    return sp


def left_integrals(B: HopfData) -> IntegralSpace:
    """Solutions of x·t = ε(x)t for every basis x."""
    return _integrals(B, "left")


def right_integrals(B: HopfData) -> IntegralSpace:
    return _integrals(B, "right")


def is_semisimple(B: HopfData) -> bool:
    """ε(t) ≠ 0 for a nonzero left integral t."""
    return bool(B.counit_of(left_integrals(B).generator()))


def _stepping_stone(bis, alpha: dict, rep: Report) -> None:
    """h ⇀ α = ε_L(h ⇀ 1) α for each basis h."""
    p = bis.pair
    H, L, F = p.H, p.L, p.field
    for h in range(H.dim):
        hv = {h: F.one}
        act_a = p.action.apply(hv, alpha)
        k = L.counit_of(p.action.apply(hv, L.unit))
        rhs = {i: k * x for i, x in alpha.items() if k * x}
        if act_a != rhs:
            rep.add("h ⇀ α = ε_L(h ⇀ 1)α", "the integral of L absorbs the action as a scalar", False,
                    {"h": H.labels[h], "lhs": L.format_vector(act_a), "rhs": L.format_vector(rhs)})
            return
    rep.add("h ⇀ α = ε_L(h ⇀ 1)α", "the integral of L absorbs the action as a scalar", True)


def _abelian(p) -> bool:
    return p.L.algebra.is_commutative() and p.H.coalgebra.is_cocommutative()


def check_integral_product(bis) -> Report:
    """α#̲‾t is a left integral of L#̲‾H, with α, t left integrals of L and H."""
    p = bis.pair
    B = bis.result
    rep = Report(f"integral of {B.name}")
    if B.antipode is None:
        raise CheckRefused("integral check needs the bismash antipode")
    alpha = left_integrals(p.L).generator()
    t = left_integrals(p.H).generator()
    nH = p.H.dim
    amb = {a * nH + h: x * y for a, x in alpha.items() for h, y in t.items()}
    v = bis.section(bis.projection.apply(amb))
    rep.add("α#̲‾t nonzero", "the projection of α⊗t is nonzero", bool(v))
    ints = IntegralSpace("left", tuple(integral_basis(B, "left")), B)
    rep.add("integral space is a line", "dim ∫_l = 1", ints.dim == 1, {"dim": ints.dim} if ints.dim != 1 else None)
    bad = None
    for x in range(B.dim):
        lhs = B.product({x: B.field.one}, v)
        e = B.counit.get(x, B.field.zero)
        rhs = {i: e * c for i, c in v.items() if e * c}
        if lhs != rhs:
            bad = {"x": B.labels[x], "lhs": B.format_vector(lhs), "rhs": B.format_vector(rhs)}
            break
    rep.add("α#̲‾t is a left integral", "x·(α#̲‾t) = ε(x)(α#̲‾t)", bad is None, bad)
    rep.add("α#̲‾t spans the integrals", "∫_l(L#̲‾H) = k(α#̲‾t)", bool(v) and ints.dim == 1 and ints.contains(v))
    _stepping_stone(bis, alpha, rep)
    if not _abelian(p) or p.field.characteristic != 0:
        rep.notes.append("outside the abelian, characteristic-zero hypotheses of the integral result; "
                         "the membership test was run anyway")
    return rep


def semisimplicity_equivalence(bis) -> Report:
    """Result semisimple ⇔ (L semisimple and λ(∫_l^H) ≠ 0) ⇔ (L semisimple and λ(∫_r^H) ≠ 0)."""
    p = bis.pair
    if not p.is_lambda_z:
        raise CheckRefused("the semisimplicity criterion is stated for λ/z pairs")
    lam = p.meta["lambda"]
    B = bis.result
    rep = Report(f"semisimplicity of {B.name}")
    s1 = is_semisimple(B)
    sL = is_semisimple(p.L)
    tl = left_integrals(p.H).generator()
    tr = right_integrals(p.H).generator()
    s2 = sL and bool(lambda_value(p.H, lam, tl))
    s3 = sL and bool(lambda_value(p.H, lam, tr))
    F = p.field
    w = {"result semisimple": s1, "L semisimple": sL,
         "λ(∫_l^H)": str(F.encode(lambda_value(p.H, lam, tl))),
         "λ(∫_r^H)": str(F.encode(lambda_value(p.H, lam, tr)))}
    rep.add("semisimple ⇔ L semisimple and λ(∫_l) ≠ 0", "three-way equivalence, left integral", s1 == s2, w)
    rep.add("semisimple ⇔ L semisimple and λ(∫_r) ≠ 0", "three-way equivalence, right integral", s1 == s3, w)
    rep.notes.append(f"truth values: result {s1}, L {sL}, left {s2}, right {s3}")
    return rep
