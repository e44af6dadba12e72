"""Smash products A#H, A#̲H and smash coproducts H⋊C, H⋊̄C.

Ambient structures live on the full tensor space (A⊗H, resp. H⊗C) and are
kept alongside the induced structures on the projected subspace, so the two
can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from ..exactmath import Field, LinearMap, NotInSubspace, Subspace, add_into, materialize
from ..hopfcore import AlgebraData, CoalgebraData, check_algebra, check_coalgebra, run_identity
from ..partial import PartialAction, PartialCoaction
from ..report import CheckRefused, Report

UNDER = "#̲"   # x#̲h
BAR = "#̄"     # x#̄h
COBAR = "⋊̄"  # h⋊̄c


# shared subspace machinery -----------------------------------------------

def bilinear(M: LinearMap, u: Mapping, v: Mapping) -> dict:
    """M(u⊗v) for M with domain (n, n)."""
    n = M.dom[1]
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            ab = a * b
            for k, c in M.cols[i * n + j].items():
                add_into(out, k, ab * c)
    return out


def pivot_labels(W: Subspace, left: Sequence[str], right: Sequence[str], sep: str) -> tuple:
    n = len(right)
    return tuple(f"{left[p // n]}{sep}{right[p % n]}" for p in W.pivots)


def induced_algebra(W: Subspace, mult: LinearMap, unit: Mapping, labels: Sequence[str],
                    what: str = "subspace") -> AlgebraData:
    """Structure constants of the restriction of an ambient product to W (closure verified)."""
    F, d = W.field, W.dim
    cols = []
    for i in range(d):
        for j in range(d):
            p = bilinear(mult, W.basis[i], W.basis[j])
            try:
                cols.append(W.coords(p))
            except NotInSubspace:
                raise ArithmeticError(f"{what} is not closed under multiplication at ({labels[i]}, {labels[j]})") from None
    try:
        u = W.coords(unit)
    except NotInSubspace:
        raise ArithmeticError(f"unit does not lie in the {what}") from None
    return AlgebraData(F, d, LinearMap(F, (d, d), (d,), cols), u, tuple(labels))


def induced_coalgebra(W: Subspace, comult: LinearMap, counit: Mapping, labels: Sequence[str],
                      counital: bool = True, right_counital: bool = True, what: str = "subspace") -> CoalgebraData:
    F, d = W.field, W.dim
    N = W.ambient
    cols = []
    for k in range(d):
        img = comult.apply(W.basis[k])
        try:
            c2 = W.coords2(img, N)
        except NotInSubspace:
            raise ArithmeticError(f"Δ({labels[k]}) escapes {what}⊗{what}") from None
        cols.append({i * d + j: x for (i, j), x in c2.items()})
    eps = {}
    for k in range(d):
        s = F.zero
        for i, c in W.basis[k].items():
            e = counit.get(i)
            if e:
                s = s + c * e
        if s:
            eps[k] = s
    return CoalgebraData(F, d, LinearMap(F, (d,), (d, d), cols), eps, tuple(labels), counital, right_counital)


def restrict_endomorphism(W: Subspace, M: LinearMap, what: str = "map") -> LinearMap:
    cols = []
    for b in W.basis:
        try:
            cols.append(W.coords(M.apply(b)))
        except NotInSubspace:
            raise ArithmeticError(f"{what} does not preserve the subspace") from None
    return LinearMap(W.field, (W.dim,), (W.dim,), cols)


def map_witness(P: LinearMap, Q: LinearMap, labels: Sequence[str] | None = None) -> dict | None:
    """First entry where two endomorphisms of a coordinate space differ."""
    d = P.first_difference(Q)
    if d is None:
        return None
    (j,), (i,), x, y = d[0][:1], d[1][:1], d[2], d[3]
    name = (lambda k: labels[k]) if labels is not None else str
    F = P.field
    return {"input": name(j), "output": name(i), "lhs": str(F.encode(x)), "rhs": str(F.encode(y))}


def idempotent_image(P: LinearMap, rep: Report, name: str, anchor: str, max_iter: int = 32,
                     labels: Sequence[str] | None = None) -> tuple[Subspace, bool]:
    """Image of P, checking P∘P = P.  When P is not idempotent the image of
    P^k is iterated until its dimension stabilizes and the fallback is flagged."""
    PP = P @ P
    ok = PP == P
    rep.add(name, anchor, ok, map_witness(PP, P, labels))
    W = Subspace.image(P)
    if ok:
        return W, False
    cur = P
    for _ in range(max_iter):
        nxt = P @ cur
        W2 = Subspace.image(nxt)
        if W2.dim == W.dim and W2 == W:
            break
        W, cur = W2, nxt
    rep.notes.append(f"{name}: projection not idempotent; stabilized image of dimension {W.dim} used")
    return W, True


# smash product ------------------------------------------------------------

def _require(obj, what: str) -> None:
    if obj.flags.get("partial_ok") is not True:
        raise CheckRefused(f"{what} has not been verified partial; run its checker first")


def ambient_smash_mult(pa: PartialAction) -> LinearMap:
    """(a⊗h)(b⊗g) = a(h1 ⇀ b) ⊗ h2 g on A⊗H (index a·dim H + h)."""
    H, A = pa.hopf, pa.algebra
    nA, nH = A.dim, H.dim
    N = nA * nH
    m = materialize(
        lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(pa.act, ("h1", "b"), ("b",))
                   .apply(A.mult, ("a", "b"), ("x",)).apply(H.mult, ("h2", "g"), ("y",))),
        pa.field, [("a", nA), ("h", nH), ("b", nA), ("g", nH)], ("x", "y"))
    return m.reshape(dom=(N, N), cod=(N,))


@dataclass(eq=False)
class SmashAlgebra:
    action: PartialAction
    ambient: AlgebraData
    E: LinearMap | None = None
    sub: Subspace | None = None
    algebra: AlgebraData | None = None
    report: Report = dc_field(default_factory=lambda: Report("smash product"))

    @property
    def ambient_dim(self) -> int:
        return self.ambient.dim

    def one_one(self) -> dict:
        """1_A⊗1_H in ambient coordinates."""
        nH = self.action.hopf.dim
        return {a * nH + h: x * y for a, x in self.action.algebra.unit.items()
                for h, y in self.action.hopf.unit.items()}


def smash_product(pa: PartialAction) -> SmashAlgebra:
    """The ambient A#H: associative with left unit 1⊗1, not unital in general."""
    _require(pa, "action")
    F = pa.field
    H, A = pa.hopf, pa.algebra
    N = A.dim * H.dim
    m = ambient_smash_mult(pa)
    LA, LH = A.labels, H.labels
    labels = tuple(f"{a}#{h}" for a in LA for h in LH)
    unit = {a * H.dim + h: x * y for a, x in A.unit.items() for h, y in H.unit.items()}
    amb = AlgebraData(F, N, m, unit, labels, unital=False, left_unital=True)
    S = SmashAlgebra(pa, amb)
    rep = S.report
    rep.extend(check_algebra(amb), "ambient ")
    # whether the full unit law happens to hold is recorded, not required
    r = Report("unit probe")
    run_identity(r, "right unit", "u(1#1) = u", F, [("u", N)],
                 lambda t: t.apply(amb.unit_map, (), ("v",)).apply(m, ("u", "v"), ("u",)),
                 lambda t: t, ("u",), [labels], [labels])
    S.ambient = AlgebraData(F, N, m, unit, labels, unital=r.results[0].passed, left_unital=True)
    rep.notes.append(f"ambient right unit law: {'holds' if r.results[0].passed else 'fails'}")
    return S


def partial_smash(pa: PartialAction) -> SmashAlgebra:
    """A#̲H = image of E(u) = u(1_A⊗1_H), with its induced unital algebra."""
    S = smash_product(pa)
    rep = S.report
    amb = S.ambient
    one = S.one_one()
    E = LinearMap(pa.field, (amb.dim,), (amb.dim,),
                  [bilinear(amb.mult, {u: pa.field.one}, one) for u in range(amb.dim)])
    S.E = E
    W, _ = idempotent_image(E, rep, "E idempotent", "E∘E = E for E(u) = u(1#1)", labels=amb.labels)
    S.sub = W
    labels = pivot_labels(W, pa.algebra.labels, pa.hopf.labels, UNDER)
    S.algebra = induced_algebra(W, amb.mult, one, labels, "A#̲H")
    rep.extend(check_algebra(S.algebra), "induced ")
    return S


# smash coproduct ----------------------------------------------------------

def ambient_smash_comult(pc: PartialCoaction) -> LinearMap:
    """Δ(h⊗c) = (h1⊗c1⁰) ⊗ (h2 c1¹ ⊗ c2) on H⊗C (index h·dim C + c)."""
    H, C = pc.hopf, pc.coalgebra
    nH, nC = H.dim, C.dim
    N = nH * nC
    D = materialize(
        lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(C.comult, ("c",), ("c1", "c2"))
                   .apply(pc.coact, ("c1",), ("c1", "k")).apply(H.mult, ("h2", "k"), ("hh",))),
        pc.field, [("h", nH), ("c", nC)], ("h1", "c1", "hh", "c2"))
    return D.reshape(dom=(N,), cod=(N, N))


def _counit_vec(H, C) -> dict:
    return {h * C.dim + c: x * y for h, x in H.counit.items() for c, y in C.counit.items()}


def projection_pi_formula(pc: PartialCoaction) -> LinearMap:
    """h⊗c ↦ ε_C(c1⁰) h c1¹ ⊗ c2, evaluated directly."""
    H, C = pc.hopf, pc.coalgebra
    return materialize(
        lambda t: (t.apply(C.comult, ("c",), ("c1", "c2")).apply(pc.coact, ("c1",), ("c1", "k"))
                   .apply(C.counit_map, ("c1",), ()).apply(H.mult, ("h", "k"), ("h",))),
        pc.field, [("h", H.dim), ("c", C.dim)], ("h", "c2")).reshape(dom=(H.dim * C.dim,), cod=(H.dim * C.dim,))


@dataclass(eq=False)
class SmashCoalgebra:
    coaction: PartialCoaction
    ambient: CoalgebraData
    Pi: LinearMap | None = None
    sub: Subspace | None = None
    coalgebra: CoalgebraData | None = None
    stabilized: bool = False
    report: Report = dc_field(default_factory=lambda: Report("smash coproduct"))

    @property
    def ambient_dim(self) -> int:
        return self.ambient.dim


def smash_coproduct(pc: PartialCoaction) -> SmashCoalgebra:
    """The ambient H⋊C: coassociative with right counit ε⊗ε."""
    _require(pc, "coaction")
    F = pc.field
    H, C = pc.hopf, pc.coalgebra
    N = H.dim * C.dim
    D = ambient_smash_comult(pc)
    labels = tuple(f"{h}⋊{c}" for h in H.labels for c in C.labels)
    amb = CoalgebraData(F, N, D, _counit_vec(H, C), labels, counital=False, right_counital=True)
    S = SmashCoalgebra(pc, amb)
    S.report.extend(check_coalgebra(amb, "right"), "ambient ")
    return S


def partial_smash_coproduct(pc: PartialCoaction) -> SmashCoalgebra:
    """H⋊̄C = image of Π = (ε⊗id)Δ, with its induced counital coalgebra."""
    S = smash_coproduct(pc)
    rep = S.report
    amb = S.ambient
    F, N = pc.field, amb.dim
    Pi = materialize(lambda t: t.apply(amb.comult, ("u",), ("v", "u")).apply(amb.counit_map, ("v",), ()),
                     F, [("u", N)], ("u",))
    S.Pi = Pi
    with rep.timed("Π element form", "(ε⊗id)Δ(h⊗c) = ε_C(c1⁰) h c1¹ ⊗ c2") as slot:
        direct = projection_pi_formula(pc)
        slot["ok"] = direct == Pi
        slot["witness"] = map_witness(Pi, direct, amb.labels)
    W, S.stabilized = idempotent_image(Pi, rep, "Π idempotent", "Π∘Π = Π for Π = (ε⊗id)Δ", labels=amb.labels)
    S.sub = W
    labels = pivot_labels(W, pc.hopf.labels, pc.coalgebra.labels, COBAR)
    S.coalgebra = induced_coalgebra(W, amb.comult, amb.counit, labels, what="H⋊̄C")
    rep.extend(check_coalgebra(S.coalgebra, "full"), "induced ")
    return S
