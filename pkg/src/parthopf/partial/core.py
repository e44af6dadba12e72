"""Partial actions H⊗A -> A and partial coactions C -> C⊗H, with checkers.

Left actions and right coactions are the primary shapes.  Right actions and
left coactions are reflected into those shapes by flipping tensor factors
(`reflect_right_action`, `reflect_left_coaction`) and checked there.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from typing import Mapping, Sequence

from ..exactmath import Field, LinearMap, add_into
from ..hopfcore import AlgebraData, CoalgebraData, HopfData, check_algebra, check_coalgebra, op_cop, run_identity
from ..hopfcore.checks import format_tensor
from ..report import CheckRefused, Report


class Flags:
    """Tri-state validity flags (None = not yet checked) with the checker that set each one."""

    def __init__(self):
        self._v: dict[str, tuple[bool | None, str]] = {}

    def get(self, name: str) -> bool | None:
        return self._v.get(name, (None, ""))[0]

    def provenance(self, name: str) -> str:
        return self._v.get(name, (None, ""))[1]

    def set(self, name: str, value: bool, by: str) -> None:
        self._v[name] = (bool(value), by)

    def as_dict(self) -> dict:
        return {k: {"value": v, "set_by": p} for k, (v, p) in sorted(self._v.items())}

    def __repr__(self) -> str:
        return f"Flags({ {k: v for k, (v, _) in self._v.items()} })"


@dataclass(eq=False)
class PartialAction:
    """``side='left'``: act is (dim H, dim A) -> dim A, h⊗a ↦ h⇀a.
    ``side='right'``: act is (dim A, dim H) -> dim A, a⊗h ↦ a↼h."""

    hopf: HopfData
    algebra: AlgebraData
    act: LinearMap
    side: str = "left"
    flags: Flags = dc_field(default_factory=Flags)
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        nH, nA = self.hopf.dim, self.algebra.dim
        want = (nH, nA) if self.side == "left" else (nA, nH)
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if self.act.dom != want or self.act.cod != (nA,):
            raise ValueError(f"{self.side} action must be {want}->({nA},), got {self.act.dom}->{self.act.cod}")
        if self.hopf.field != self.algebra.field:
            raise ValueError("action across different fields")

    @property
    def field(self) -> Field:
        return self.hopf.field

    def apply(self, h: Mapping, a: Mapping) -> dict:
        """h⇀a (left) or a↼h (right) on sparse vectors."""
        nA = self.algebra.dim
        nH = self.hopf.dim
        out: dict = {}
        for i, x in h.items():
            for j, y in a.items():
                k = i * nA + j if self.side == "left" else j * nH + i
                for r, c in self.act.cols[k].items():
                    add_into(out, r, x * y * c)
        return out


@dataclass(eq=False)
class PartialCoaction:
    """``side='right'``: coact is dim C -> (dim C, dim H), c ↦ c⁰⊗c¹.
    ``side='left'``: coact is dim C -> (dim H, dim C), c ↦ c⁻¹⊗c⁰."""

    hopf: HopfData
    coalgebra: CoalgebraData
    coact: LinearMap
    side: str = "right"
    flags: Flags = dc_field(default_factory=Flags)
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        nH, nC = self.hopf.dim, self.coalgebra.dim
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        want = (nC, nH) if self.side == "right" else (nH, nC)
        if self.coact.dom != (nC,) or self.coact.cod != want:
            raise ValueError(f"{self.side} coaction must be ({nC},)->{want}, got {self.coact.dom}->{self.coact.cod}")
        if self.hopf.field != self.coalgebra.field:
            raise ValueError("coaction across different fields")

    @property
    def field(self) -> Field:
        return self.hopf.field


# left actions -------------------------------------------------------------

def _note_global(rep: Report, g: Report) -> None:
    """Globality is a property, not an axiom: record it as a note on the axiom report."""
    r = g.results[-1]
    rep.notes.append(f"{r.name}: {'yes' if r.passed else 'no'}" + ("" if r.passed else f" (witness {r.witness})"))

def _left_only(pa: PartialAction) -> None:
    if pa.side != "left":
        raise ValueError("this checker takes a left action; reflect right actions first")


def check_partial_action(pa: PartialAction, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    """Unit, multiplicativity and partial associativity of a left partial module algebra, plus globality."""
    _left_only(pa)
    rep = rep if rep is not None else Report("partial action")
    H, A, act, F = pa.hopf, pa.algebra, pa.act, pa.field
    nH, nA = H.dim, A.dim
    LH, LA = H.labels, A.labels
    mA, mH, uA, uH, DH = A.mult, H.mult, A.unit_map, H.unit_map, H.comult
    results = []
    results.append(run_identity(
        rep, "action unital", "1_H ⇀ a = a", F, [("a", nA)],
        lambda t: t.apply(uH, (), ("h",), at=0).apply(act, ("h", "a"), ("a",)),
        lambda t: t, ("a",), [LA], [LA]))
    if not (stop_on_fail and not results[-1]):
        results.append(run_identity(
            rep, "action multiplicative", "h ⇀ ab = (h1 ⇀ a)(h2 ⇀ b)", F, [("h", nH), ("a", nA), ("b", nA)],
            lambda t: t.apply(mA, ("a", "b"), ("a",)).apply(act, ("h", "a"), ("r",)),
            lambda t: (t.apply(DH, ("h",), ("h1", "h2")).apply(act, ("h1", "a"), ("a",))
                       .apply(act, ("h2", "b"), ("b",)).apply(mA, ("a", "b"), ("r",))),
            ("r",), [LH, LA, LA], [LA]))
    if not (stop_on_fail and not results[-1]):
        results.append(run_identity(
            rep, "action partial associativity", "h ⇀ (g ⇀ a) = (h1 ⇀ 1)(h2 g ⇀ a)", F,
            [("h", nH), ("g", nH), ("a", nA)],
            lambda t: t.apply(act, ("g", "a"), ("a",)).apply(act, ("h", "a"), ("r",)),
            lambda t: (t.apply(DH, ("h",), ("h1", "h2")).apply(mH, ("h2", "g"), ("g",))
                       .apply(act, ("g", "a"), ("a",)).apply(uA, (), ("u",))
                       .apply(act, ("h1", "u"), ("u",)).apply(mA, ("u", "a"), ("r",))),
            ("r",), [LH, LH, LA], [LA]))
    ok = all(results) and len(results) == 3
    pa.flags.set("partial_ok", ok, "check_partial_action")
    _note_global(rep, check_global_action(pa))
    return rep


def check_global_action(pa: PartialAction, rep: Report | None = None) -> Report:
    _left_only(pa)
    rep = rep if rep is not None else Report("global action")
    H, A, F = pa.hopf, pa.algebra, pa.field
    ok = run_identity(
        rep, "action global", "h ⇀ 1_A = ε(h) 1_A", F, [("h", H.dim)],
        lambda t: t.apply(A.unit_map, (), ("a",)).apply(pa.act, ("h", "a"), ("a",)),
        lambda t: t.apply(H.counit_map, ("h",), ()).apply(A.unit_map, (), ("a",)),
        ("a",), [H.labels], [A.labels])
    pa.flags.set("global_ok", ok, "check_global_action")
    return rep


def check_symmetric_action(pa: PartialAction, rep: Report | None = None) -> Report:
    """Symmetry: h ⇀ (g ⇀ a) = (h1 g ⇀ a)(h2 ⇀ 1)."""
    _left_only(pa)
    rep = rep if rep is not None else Report("symmetric action")
    H, A, act, F = pa.hopf, pa.algebra, pa.act, pa.field
    ok = run_identity(
        rep, "action symmetric", "h ⇀ (g ⇀ a) = (h1 g ⇀ a)(h2 ⇀ 1)", F,
        [("h", H.dim), ("g", H.dim), ("a", A.dim)],
        lambda t: t.apply(act, ("g", "a"), ("a",)).apply(act, ("h", "a"), ("r",)),
        lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(H.mult, ("h1", "g"), ("g",))
                   .apply(act, ("g", "a"), ("a",)).apply(A.unit_map, (), ("u",))
                   .apply(act, ("h2", "u"), ("u",)).apply(A.mult, ("a", "u"), ("r",))),
        ("r",), [H.labels, H.labels, A.labels], [A.labels])
    pa.flags.set("symmetric_ok", ok, "check_symmetric_action")
    return rep


# right coactions ----------------------------------------------------------

def _right_only(pc: PartialCoaction) -> None:
    if pc.side != "right":
        raise ValueError("this checker takes a right coaction; reflect left coactions first")


def check_partial_coaction(pc: PartialCoaction, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    """Counit, comultiplicativity and partial coassociativity of a right partial comodule coalgebra, plus globality."""
    _right_only(pc)
    rep = rep if rep is not None else Report("partial coaction")
    H, C, rho, F = pc.hopf, pc.coalgebra, pc.coact, pc.field
    nC = C.dim
    LH, LC = H.labels, C.labels
    results = [run_identity(
        rep, "coaction counital", "(id ⊗ ε_H) ρ = id", F, [("c", nC)],
        lambda t: t.apply(rho, ("c",), ("c", "h")).apply(H.counit_map, ("h",), ()),
        lambda t: t, ("c",), [LC], [LC])]
    if not (stop_on_fail and not results[-1]):
        results.append(run_identity(
            rep, "coaction comultiplicative", "(Δ_C ⊗ id) ρ(c) = c1⁰ ⊗ c2⁰ ⊗ c1¹ c2¹", F, [("c", nC)],
            lambda t: t.apply(rho, ("c",), ("c", "h")).apply(C.comult, ("c",), ("x", "y")),
            lambda t: (t.apply(C.comult, ("c",), ("x", "y")).apply(rho, ("x",), ("x", "hx"))
                       .apply(rho, ("y",), ("y", "hy")).apply(H.mult, ("hx", "hy"), ("h",))),
            ("x", "y", "h"), [LC], [LC, LC, LH]))
    if not (stop_on_fail and not results[-1]):
        results.append(run_identity(
            rep, "coaction partial coassociativity",
            "(ρ ⊗ id) ρ(c) = c1⁰ ⊗ c1¹_1 ⊗ c1¹_2 ε_C(c2⁰) c2¹", F, [("c", nC)],
            lambda t: t.apply(rho, ("c",), ("c", "k2")).apply(rho, ("c",), ("c", "k1")),
            lambda t: (t.apply(C.comult, ("c",), ("c", "d")).apply(rho, ("c",), ("c", "k"))
                       .apply(H.comult, ("k",), ("k1", "m")).apply(rho, ("d",), ("d", "l"))
                       .apply(C.counit_map, ("d",), ()).apply(H.mult, ("m", "l"), ("k2",))),
            ("c", "k1", "k2"), [LC], [LC, LH, LH]))
    ok = all(results) and len(results) == 3
    pc.flags.set("partial_ok", ok, "check_partial_coaction")
    _note_global(rep, check_global_coaction(pc))
    return rep


def check_global_coaction(pc: PartialCoaction, rep: Report | None = None) -> Report:
    _right_only(pc)
    rep = rep if rep is not None else Report("global coaction")
    H, C, F = pc.hopf, pc.coalgebra, pc.field
    ok = run_identity(
        rep, "coaction global", "ε_C(c⁰) c¹ = ε_C(c) 1_H", F, [("c", C.dim)],
        lambda t: t.apply(pc.coact, ("c",), ("c", "h")).apply(C.counit_map, ("c",), ()),
        lambda t: t.apply(C.counit_map, ("c",), ()).apply(H.unit_map, (), ("h",)),
        ("h",), [C.labels], [H.labels])
    pc.flags.set("global_ok", ok, "check_global_coaction")
    return rep


def check_symmetric_coaction(pc: PartialCoaction, rep: Report | None = None) -> Report:
    """Symmetry: (ρ ⊗ id) ρ(c) = c2⁰ ⊗ c2¹_1 ⊗ c2¹_2 ε_C(c1⁰) c1¹."""
    _right_only(pc)
    rep = rep if rep is not None else Report("symmetric coaction")
    H, C, rho, F = pc.hopf, pc.coalgebra, pc.coact, pc.field
    ok = run_identity(
        rep, "coaction symmetric", "(ρ ⊗ id) ρ(c) = c2⁰ ⊗ c2¹_1 ⊗ c2¹_2 ε_C(c1⁰) c1¹", F, [("c", C.dim)],
        lambda t: t.apply(rho, ("c",), ("c", "k2")).apply(rho, ("c",), ("c", "k1")),
        lambda t: (t.apply(C.comult, ("c",), ("d", "c")).apply(rho, ("c",), ("c", "k"))
                   .apply(H.comult, ("k",), ("k1", "m")).apply(rho, ("d",), ("d", "l"))
                   .apply(C.counit_map, ("d",), ()).apply(H.mult, ("m", "l"), ("k2",))),
        ("c", "k1", "k2"), [C.labels], [C.labels, H.labels, H.labels])
    pc.flags.set("symmetric_ok", ok, "check_symmetric_coaction")
    return rep


# λ- and z-constructors ----------------------------------------------------

def _vec(F: Field, v, n: int) -> dict:
    if isinstance(v, Mapping):
        out = {int(k): F(x) for k, x in v.items()}
    else:
        v = list(v)
        if len(v) != n:
            raise ValueError(f"expected {n} entries, got {len(v)}")
        out = {i: F(x) for i, x in enumerate(v)}
    return {k: x for k, x in out.items() if x}


def lambda_value(H: HopfData, lam: Mapping, v: Mapping):
    F = H.field
    s = F.zero
    for i, x in v.items():
        c = lam.get(i)
        if c:
            s = s + c * x
    return s


def lambda_condition_failure(H: HopfData, lam: Mapping) -> str | None:
    """None when λ(1) = 1 and λ(h)λ(g) = λ(h1)λ(h2 g) on all basis pairs, else a description."""
    F = H.field
    if lambda_value(H, lam, H.unit) != F.one:
        return f"lambda(1_H) = {F.encode(lambda_value(H, lam, H.unit))}, not 1"
    n = H.dim
    for h in range(n):
        dh = H.coproduct({h: F.one})
        for g in range(n):
            lhs = lam.get(h, F.zero) * lam.get(g, F.zero)
            rhs = F.zero
            for (a, b), c in dh.items():
                la = lam.get(a)
                if la:
                    rhs = rhs + c * la * lambda_value(H, lam, H.product({b: F.one}, {g: F.one}))
            if lhs != rhs:
                return f"lambda(h)lambda(g) != lambda(h1)lambda(h2 g) at h={H.labels[h]}, g={H.labels[g]}"
    return None


def lambda_symmetric(H: HopfData, lam: Mapping) -> bool:
    """λ(h1)λ(h2 g) = λ(h1 g)λ(h2) on all basis pairs (symmetry of the λ-action)."""
    F = H.field
    for h in range(H.dim):
        dh = H.coproduct({h: F.one})
        for g in range(H.dim):
            gv = {g: F.one}
            lhs = rhs = F.zero
            for (a, b), c in dh.items():
                lhs = lhs + c * lam.get(a, F.zero) * lambda_value(H, lam, H.product({b: F.one}, gv))
                rhs = rhs + c * lambda_value(H, lam, H.product({a: F.one}, gv)) * lam.get(b, F.zero)
            if lhs != rhs:
                return False
    return True


def action_from_lambda(H: HopfData, A: AlgebraData, lam) -> PartialAction:
    """h ⇀ a = λ(h) a, validated by the scalar criterion on λ."""
    F = H.field
    lam = _vec(F, lam, H.dim)
    bad = lambda_condition_failure(H, lam)
    if bad:
        raise CheckRefused(f"lambda does not define a partial action: {bad}")
    nA = A.dim
    cols = []
    for h in range(H.dim):
        c = lam.get(h)
        for a in range(nA):
            cols.append({a: c} if c else {})
    pa = PartialAction(H, A, LinearMap(F, (H.dim, nA), (nA,), cols), "left", meta={"lambda": lam})
    pa.flags.set("partial_ok", True, "action_from_lambda")
    return pa


def z_condition_failure(H: HopfData, z: Mapping) -> str | None:
    F = H.field
    if H.counit_of(z) != F.one:
        return f"epsilon(z) = {F.encode(H.counit_of(z))}, not 1"
    zz = {(a, b): x * y for a, x in z.items() for b, y in z.items()}
    dz = H.coproduct(z)
    rhs: dict = {}
    for (a, b), c in dz.items():
        for k, y in H.product({b: F.one}, z).items():
            add_into(rhs, (a, k), c * y)
    if zz != rhs:
        return "z⊗z != Δ(z)(1⊗z)"
    return None


def coaction_from_z(C: CoalgebraData, H: HopfData, z) -> PartialCoaction:
    """ρ(c) = c ⊗ z, validated by the criterion on z; also asserts z² = z."""
    F = H.field
    z = _vec(F, z, H.dim)
    bad = z_condition_failure(H, z)
    if bad:
        raise CheckRefused(f"z does not define a partial coaction: {bad}")
    if H.product(z, z) != z:
        raise ArithmeticError("z passed the coaction criterion but z² != z")
    nH = H.dim
    cols = [{c * nH + k: x for k, x in z.items()} for c in range(C.dim)]
    pc = PartialCoaction(H, C, LinearMap(F, (C.dim,), (C.dim, nH), cols), "right", meta={"z": z})
    pc.flags.set("partial_ok", True, "coaction_from_z")
    return pc


def is_central(H: HopfData, z: Mapping) -> bool:
    F = H.field
    return all(H.product(z, {x: F.one}) == H.product({x: F.one}, z) for x in range(H.dim))


def lambda_commutes(H: HopfData, lam: Mapping) -> bool:
    """λ(h1) h2 = h1 λ(h2) for every basis h."""
    F = H.field
    for h in range(H.dim):
        l: dict = {}
        r: dict = {}
        for (a, b), c in H.coproduct({h: F.one}).items():
            add_into(l, b, c * lam.get(a, F.zero))
            add_into(r, a, c * lam.get(b, F.zero))
        if l != r:
            return False
    return True


# adjoint-type pair --------------------------------------------------------

def adjoint_pair(H: HopfData, lam, z) -> tuple[PartialAction, PartialCoaction]:
    """H^op acting on H by h ⇀ a = S(h1) a h3 λ(h2); H coacting on H^op by ρ(h) = h2 ⊗ S(h1) z h3."""
    from ..hopfcore import opposite

    F = H.field
    if H.antipode is None:
        raise CheckRefused("adjoint pair needs an antipode")
    try:
        Hop = opposite(H)
    except ValueError as e:
        raise CheckRefused(f"adjoint pair needs an invertible antipode: {e}") from None
    lam = _vec(F, lam, H.dim)
    z = _vec(F, z, H.dim)
    bad = lambda_condition_failure(Hop, lam)
    if bad:
        raise CheckRefused(f"lambda fails the partial action criterion on H^op: {bad}")
    if not lambda_commutes(H, lam):
        raise CheckRefused("lambda(h1) h2 != h1 lambda(h2)")
    if not is_central(H, z):
        raise CheckRefused("z is not central")
    badz = z_condition_failure(H, z)
    if badz:
        raise CheckRefused(f"z fails the partial coaction criterion: {badz}")
    n = H.dim
    S, m, D = H.antipode, H.mult, H.comult
    lamvec = LinearMap(F, (n,), (), [({0: lam[i]} if i in lam else {}) for i in range(n)])
    from ..exactmath import materialize

    act = materialize(
        lambda t: (t.apply(D, ("h",), ("h1", "r")).apply(D, ("r",), ("h2", "h3"))
                   .apply(S, ("h1",), ("h1",)).apply(lamvec, ("h2",), ())
                   .apply(m, ("h1", "a"), ("a",)).apply(m, ("a", "h3"), ("a",))),
        F, [("h", n), ("a", n)], ("a",))
    zmap = LinearMap(F, (), (n,), [z])
    coact = materialize(
        lambda t: (t.apply(D, ("h",), ("h1", "r")).apply(D, ("r",), ("h2", "h3"))
                   .apply(S, ("h1",), ("h1",)).apply(zmap, (), ("z",))
                   .apply(m, ("h1", "z"), ("l",)).apply(m, ("l", "h3"), ("l",))),
        F, [("h", n)], ("h2", "l"))
    pa = PartialAction(Hop, H.algebra, act, "left", meta={"lambda": lam, "kind": "adjoint"})
    pc = PartialCoaction(H, Hop.coalgebra, coact, "right", meta={"z": z, "kind": "adjoint"})
    for obj, checker in ((pa, check_partial_action), (pc, check_partial_coaction)):
        r = checker(obj)
        if not obj.flags.get("partial_ok"):
            raise CheckRefused(f"adjoint construction failed its own axiom check: {r.first_failure().name}", r)
    return pa, pc


# reflection of right actions / left coactions -----------------------------

def opposite_algebra(A: AlgebraData) -> AlgebraData:
    flip = LinearMap.permutation(A.field, (A.dim, A.dim), (1, 0))
    return replace(A, mult=A.mult @ flip)


def coopposite_coalgebra(C: CoalgebraData) -> CoalgebraData:
    flip = LinearMap.permutation(C.field, (C.dim, C.dim), (1, 0))
    return replace(C, comult=flip @ C.comult)


def reflect_right_action(pa: PartialAction) -> PartialAction:
    """A right action of K on A as the left action of K^{op,cop} on A^op: k ⇀ a = a ↼ k."""
    if pa.side != "right":
        raise ValueError("expected a right action")
    F = pa.field
    flip = LinearMap.permutation(F, (pa.hopf.dim, pa.algebra.dim), (1, 0))
    return PartialAction(op_cop(pa.hopf), opposite_algebra(pa.algebra), pa.act @ flip, "left",
                         meta={**pa.meta, "reflected_from": "right"})


def reflect_left_coaction(pc: PartialCoaction) -> PartialCoaction:
    """A left coaction of K on C as the right coaction of K^{op,cop} on C^cop: c ↦ c⁰ ⊗ c⁻¹."""
    if pc.side != "left":
        raise ValueError("expected a left coaction")
    F = pc.field
    flip = LinearMap.permutation(F, (pc.hopf.dim, pc.coalgebra.dim), (1, 0))
    return PartialCoaction(op_cop(pc.hopf), coopposite_coalgebra(pc.coalgebra), flip @ pc.coact, "right",
                           meta={**pc.meta, "reflected_from": "left"})


def check_right_partial_action(pa: PartialAction) -> Report:
    """Mirrored axioms, evaluated on the reflected left action."""
    refl = reflect_right_action(pa)
    r = check_partial_action(refl, Report("right partial action (reflected)"))
    for k in ("partial_ok", "global_ok"):
        pa.flags.set(k, refl.flags.get(k), "check_right_partial_action")
    return r


def check_left_partial_coaction(pc: PartialCoaction) -> Report:
    refl = reflect_left_coaction(pc)
    r = check_partial_coaction(refl, Report("left partial coaction (reflected)"))
    for k in ("partial_ok", "global_ok"):
        pc.flags.set(k, refl.flags.get(k), "check_left_partial_coaction")
    return r


def check_right_action_direct(pa: PartialAction) -> Report:
    """The right-handed axioms written out directly (no reflection):
    a ↼ 1 = a, (ab) ↼ h = (a ↼ h1)(b ↼ h2), (a ↼ g) ↼ h = (a ↼ g h1)(1 ↼ h2)."""
    if pa.side != "right":
        raise ValueError("expected a right action")
    rep = Report("right partial action (direct)")
    H, A, act, F = pa.hopf, pa.algebra, pa.act, pa.field
    LH, LA = H.labels, A.labels
    run_identity(rep, "action unital", "a ↼ 1 = a", F, [("a", A.dim)],
                 lambda t: t.apply(H.unit_map, (), ("h",)).apply(act, ("a", "h"), ("a",)),
                 lambda t: t, ("a",), [LA], [LA])
    run_identity(rep, "action multiplicative", "(ab) ↼ h = (a ↼ h1)(b ↼ h2)", F,
                 [("a", A.dim), ("b", A.dim), ("h", H.dim)],
                 lambda t: t.apply(A.mult, ("a", "b"), ("a",)).apply(act, ("a", "h"), ("r",)),
                 lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(act, ("a", "h1"), ("a",))
                            .apply(act, ("b", "h2"), ("b",)).apply(A.mult, ("a", "b"), ("r",))),
                 ("r",), [LA, LA, LH], [LA])
    run_identity(rep, "action partial associativity", "(a ↼ g) ↼ h = (a ↼ g h1)(1 ↼ h2)", F,
                 [("a", A.dim), ("g", H.dim), ("h", H.dim)],
                 lambda t: t.apply(act, ("a", "g"), ("a",)).apply(act, ("a", "h"), ("r",)),
                 lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(H.mult, ("g", "h1"), ("g",))
                            .apply(act, ("a", "g"), ("a",)).apply(A.unit_map, (), ("u",))
                            .apply(act, ("u", "h2"), ("u",)).apply(A.mult, ("a", "u"), ("r",))),
                 ("r",), [LA, LH, LH], [LA])
    return rep


def check_left_coaction_direct(pc: PartialCoaction) -> Report:
    """Left-handed axioms written out directly:
    (ε ⊗ id) λ = id, (id ⊗ Δ) λ(c) = c1⁻¹ c2⁻¹ ⊗ c1⁰ ⊗ c2⁰,
    (id ⊗ λ) λ(c) = c1⁻¹ ε(c1⁰) c2⁻¹_1 ⊗ c2⁻¹_2 ⊗ c2⁰."""
    if pc.side != "left":
        raise ValueError("expected a left coaction")
    rep = Report("left partial coaction (direct)")
    H, C, lam, F = pc.hopf, pc.coalgebra, pc.coact, pc.field
    LH, LC = H.labels, C.labels
    run_identity(rep, "coaction counital", "(ε_H ⊗ id) λ = id", F, [("c", C.dim)],
                 lambda t: t.apply(lam, ("c",), ("h", "c")).apply(H.counit_map, ("h",), ()),
                 lambda t: t, ("c",), [LC], [LC])
    run_identity(rep, "coaction comultiplicative", "(id ⊗ Δ_C) λ(c) = c1⁻¹ c2⁻¹ ⊗ c1⁰ ⊗ c2⁰", F, [("c", C.dim)],
                 lambda t: t.apply(lam, ("c",), ("h", "c")).apply(C.comult, ("c",), ("x", "y")),
                 lambda t: (t.apply(C.comult, ("c",), ("x", "y")).apply(lam, ("x",), ("hx", "x"))
                            .apply(lam, ("y",), ("hy", "y")).apply(H.mult, ("hx", "hy"), ("h",))),
                 ("h", "x", "y"), [LC], [LH, LC, LC])
    run_identity(rep, "coaction partial coassociativity",
                 "(id ⊗ λ) λ(c) = c1⁻¹ ε(c1⁰) c2⁻¹_1 ⊗ c2⁻¹_2 ⊗ c2⁰", F, [("c", C.dim)],
                 lambda t: t.apply(lam, ("c",), ("k1", "c")).apply(lam, ("c",), ("k2", "c")),
                 lambda t: (t.apply(C.comult, ("c",), ("d", "c")).apply(lam, ("c",), ("k", "c"))
                            .apply(H.comult, ("k",), ("m", "k2")).apply(lam, ("d",), ("l", "d"))
                            .apply(C.counit_map, ("d",), ()).apply(H.mult, ("l", "m"), ("k1",))),
                 ("k1", "k2", "c"), [LC], [LH, LH, LC])
    return rep
