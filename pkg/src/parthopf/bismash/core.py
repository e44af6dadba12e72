"""The partial bismash product L#̲‾H of a quasi-abelian partial matched pair.

L#̲H is the image of E(u) = u(1#1) on the ambient L#H; L#̲‾H is the image of
Π∘E with Π = (ε⊗id)Δ.  Multiplication, Δ and ε are the ambient ones
restricted, and every induced structure is re-verified from scratch.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..exactmath import LinearMap, Matrix, Subspace, materialize
from ..hopfcore import (
    CoalgebraData,
    HopfData,
    check_antipode,
    check_bialgebra,
    check_coalgebra,
    dual_hopf,
    op_cop,
    run_identity,
    solve_antipode,
)
from ..matchedpair import (
    PartialMatchedPair,
    ambient_comult,
    ambient_counit,
    check_antipode_conditions,
    check_derived_identities,
    check_mirrored_pair,
    dual_pair,
    is_quasi_abelian_pmp,
)
from ..report import CheckRefused, Report
from ..smash import (
    BAR,
    UNDER,
    SmashAlgebra,
    bilinear,
    idempotent_image,
    induced_algebra,
    induced_coalgebra,
    map_witness,
    partial_smash,
    pivot_labels,
)


@dataclass(eq=False)
class BismashHopf:
    pair: PartialMatchedPair
    stage1: SmashAlgebra
    stage1_coalgebra: CoalgebraData
    E: LinearMap
    Pi: LinearMap
    projection: LinearMap  # the composite whose image is the result
    sub: Subspace
    result: HopfData
    report: Report
    antipode_source: str = "absent"
    extras: dict = dc_field(default_factory=dict)

    @property
    def ambient_dim(self) -> int:
        return self.E.in_dim

    @property
    def ambient_labels(self) -> tuple:
        return self.stage1.ambient.labels

    def element(self, x: int, h: int) -> dict:
        """Result coordinates of x#̲‾h (basis indices of L and H)."""
        return self.sub.coords(self.projection.cols[x * self.pair.H.dim + h])

    def embed(self, coords) -> dict:
        return self.sub.embed(coords)

    def section(self, v) -> dict:
        return self.sub.coords(v)


def _refuse_unless_quasi_abelian(p: PartialMatchedPair) -> None:
    if not is_quasi_abelian_pmp(p):
        bad = [k for k in ("pmp_ok", "quasi_abelian_ok") if not p.flags.get(k)]
        rep = p.reports.get("pmp") if "pmp_ok" in bad else p.reports.get("quasi_abelian")
        raise CheckRefused(
            "bismash needs a quasi-abelian partial matched pair "
            "(h2⁰ ⊗ (h1⇀x)h2¹ = h1⁰ ⊗ h1¹(h2⇀x) and the matched-pair axioms); failed: " + ", ".join(bad), rep)


def _pi_map(D: LinearMap, eps: dict, F, N: int) -> LinearMap:
    emap = LinearMap(F, (N,), (), [({0: eps[i]} if i in eps else {}) for i in range(N)])
    return materialize(lambda t: t.apply(D, ("u",), ("v", "u")).apply(emap, ("v",), ()), F, [("u", N)], ("u",))


def _as_ambient(p: PartialMatchedPair) -> LinearMap:
    """Identity (dim L, dim H) -> (dim L · dim H), to fuse two legs into one ambient leg."""
    N = p.L.dim * p.H.dim
    return LinearMap.identity(p.field, (N,)).reshape(dom=(p.L.dim, p.H.dim))


def closed_form_antipode_ambient(p: PartialMatchedPair, P: LinearMap, mult: LinearMap) -> LinearMap:
    """x⊗h ↦ P(1 ⊗ S_H(h⁰)) · P(S_L(h¹) S_L(x) ⊗ 1) on ambient coordinates."""
    H, L = p.H, p.L
    fuse = _as_ambient(p)
    return materialize(
        lambda t: (t.apply(p.rho, ("h",), ("k", "l")).apply(H.antipode, ("k",), ("k",))
                   .apply(L.antipode, ("l",), ("l",)).apply(L.antipode, ("x",), ("x",))
                   .apply(L.mult, ("l", "x"), ("y",)).apply(L.unit_map, (), ("one",))
                   .apply(fuse, ("one", "k"), ("u",)).apply(P, ("u",), ("u",))
                   .apply(H.unit_map, (), ("hone",)).apply(fuse, ("y", "hone"), ("v",))
                   .apply(P, ("v",), ("v",)).apply(mult, ("u", "v"), ("w",))),
        p.field, [("x", L.dim), ("h", H.dim)], ("w",)).reshape(dom=(L.dim * H.dim,))


def bismash(p: PartialMatchedPair, solve: bool = False, derived: bool = True, order: str = "PE") -> BismashHopf:
    """Build L#̲‾H.  ``order='EP'`` applies the projections the other way round."""
    _refuse_unless_quasi_abelian(p)
    F = p.field
    H, L = p.H, p.L
    nH, nL = H.dim, L.dim
    N = nH * nL
    rep = Report(f"bismash {p.name}" + (" (projections E after Π)" if order == "EP" else ""))
    if derived:
        rep.extend(check_derived_identities(p, include_delta=True), "pair: ")
    st = partial_smash(p.action)
    rep.extend(st.report, "L#H algebra: ")
    amb = st.ambient
    D = ambient_comult(p)
    eps = ambient_counit(p)
    labels_amb = amb.labels
    rep.extend(check_coalgebra(CoalgebraData(F, N, D, eps, labels_amb, False, True), "right"), "L#H coalgebra: ")

    # stage 1: L#̲H
    C1 = induced_coalgebra(st.sub, D, eps, st.algebra.labels, counital=False, right_counital=True, what="L#̲H")
    c1rep = check_coalgebra(C1, "full")
    for r in c1rep.results:
        if r.name == "left counit":
            rep.notes.append(f"L#̲H left counit law: {'holds' if r.passed else 'fails'}"
                             + ("" if r.passed else f" at {r.witness}"))
            st_left = r
        else:
            rep.results.append(r)
            r.name = "L#̲H " + r.name
    E = st.E
    Lone = L.unit_map
    run_identity(rep, "L#̲H counit formula", "ε(x#̲h) = ε_L(x) ε_L(h ⇀ 1)", F, [("x", nL), ("h", nH)],
                 lambda t: (t.apply(_as_ambient(p), ("x", "h"), ("u",)).apply(E, ("u",), ("u",))
                            .apply(LinearMap(F, (N,), (), [({0: eps[i]} if i in eps else {}) for i in range(N)]), ("u",), ())),
                 lambda t: (t.apply(L.counit_map, ("x",), ()).apply(Lone, (), ("w",))
                            .apply(p.act, ("h", "w"), ("w",)).apply(L.counit_map, ("w",), ())),
                 (), [L.labels, H.labels], [])

    # stage 2: L#̲‾H
    Pi = _pi_map(D, eps, F, N)
    PE, EP = Pi @ E, E @ Pi
    rep.add("ΠE = EΠ", "the two projections commute", PE == EP, map_witness(PE, EP, labels_amb))
    P = PE if order == "PE" else EP
    W, stab = idempotent_image(P, rep, "projection idempotent", "(ΠE)² = ΠE", labels=labels_amb)
    fuse = _as_ambient(p)
    normal = materialize(
        lambda t: (t.apply(H.comult, ("h",), ("h1", "r")).apply(H.comult, ("r",), ("h2", "h3"))
                   .apply(p.rho, ("h1",), ("a", "a1")).apply(H.counit_map, ("a",), ())
                   .apply(Lone, (), ("w",)).apply(p.act, ("h2", "w"), ("w",))
                   .apply(L.mult, ("x", "a1"), ("x",)).apply(L.mult, ("x", "w"), ("x",))
                   .apply(fuse, ("x", "h3"), ("u",))),
        F, [("x", nL), ("h", nH)], ("u",)).reshape(dom=(N,))
    rep.add("normal form", "x#̲‾h = ε_H(h1⁰) x h1¹ (h2 ⇀ 1) # h3", normal == P, map_witness(P, normal, labels_amb))
    over = materialize(
        lambda t: (t.apply(H.comult, ("h",), ("h1", "h2")).apply(p.rho, ("h1",), ("a", "a1"))
                   .apply(Lone, (), ("w",)).apply(p.act, ("a", "w"), ("w",)).apply(L.counit_map, ("w",), ())
                   .apply(L.mult, ("x", "a1"), ("x",)).apply(fuse, ("x", "h2"), ("u",))
                   .apply(E, ("u",), ("u",))),
        F, [("x", nL), ("h", nH)], ("u",)).reshape(dom=(N,))
    rep.add("normal form, second expression", "x#̲‾h = E(ε_L(h1⁰ ⇀ 1) x h1¹ # h2)", over == P,
            map_witness(P, over, labels_amb))

    labels = pivot_labels(W, L.labels, H.labels, BAR)
    one = {x * nH + h: a * b for x, a in L.unit.items() for h, b in H.unit.items()}
    unit = P.apply(one)
    A = induced_algebra(W, amb.mult, unit, labels, "L#̲‾H")
    C = induced_coalgebra(W, D, eps, labels, what="L#̲‾H")
    B = HopfData(A, C, None, f"{L.name}#̲‾{H.name}", {"pair": p.name})
    rep.extend(check_bialgebra(B), "result: ")
    u = B.unit
    gl = B.coproduct(u) == {(i, j): a * b for i, a in u.items() for j, b in u.items()}
    rep.add("unit grouplike", "Δ(1#̲‾1) = (1#̲‾1)⊗(1#̲‾1)", gl)

    out = BismashHopf(p, st, C1, E, Pi, P, W, B, rep)
    out.extras["stage1_left_counit"] = st_left
    out.extras["stabilized"] = stab

    cond = check_antipode_conditions(p) if (H.antipode is not None and L.antipode is not None) else None
    if cond is not None:
        rep.extend(cond, "pair: ")
    if cond is not None and p.flags.get("unit_condition_ok") and p.flags.get("counit_condition_ok"):
        T = closed_form_antipode_ambient(p, P, amb.mult)
        cols = [W.coords(T.apply(b)) for b in W.basis]
        S = LinearMap(F, (W.dim,), (W.dim,), cols)
        B = B.with_antipode(S)
        out.result = B
        out.antipode_source = "closed form"
        rep.extend(check_antipode(B), "result: ")
        solved = solve_antipode(B)
        rep.add("antipode agrees with solver", "closed-form S = convolution inverse of id", solved == S,
                map_witness(S, solved, labels) if solved is not None else {"solver": "no antipode"})
    else:
        rep.notes.append("antipode conditions not both verified; antipode left absent")
        if solve:
            S = solve_antipode(B)
            if S is not None:
                out.result = B.with_antipode(S)
                out.antipode_source = "solver"
                rep.extend(check_antipode(out.result), "result: ")
            else:
                rep.notes.append("solver: identity has no convolution inverse")
    return out


def bismash_alt(p: PartialMatchedPair) -> BismashHopf:
    """Π first, then E; the image of Π alone is also checked to be a counital coalgebra with left unit."""
    out = bismash(p, derived=False, order="EP")
    F = p.field
    N = out.ambient_dim
    Wbar = Subspace.image(out.Pi)
    rep = out.report
    labels = pivot_labels(Wbar, p.L.labels, p.H.labels, "#̄")
    Cbar = induced_coalgebra(Wbar, ambient_comult(p), ambient_counit(p), labels, what="L#̄H")
    rep.extend(check_coalgebra(Cbar, "full"), "L#̄H coalgebra: ")
    amb = out.stage1.ambient
    closed = all(Wbar.contains(bilinear(amb.mult, a, b)) for a in Wbar.basis for b in Wbar.basis)
    rep.add("L#̄H closed under product", "image of Π is a subalgebra of L#H", closed)
    one = {x * p.H.dim + h: a * b for x, a in p.L.unit.items() for h, b in p.H.unit.items()}
    left = all(bilinear(amb.mult, one, b) == b for b in Wbar.basis)
    rep.add("L#̄H left unit", "(1#1)u = u on the image of Π", left)
    out.extras["overline_dim"] = Wbar.dim
    return out


def compare_constructions(a: BismashHopf, b: BismashHopf) -> Report:
    rep = Report("bismash vs alternate order")
    rep.add("same ambient subspace", "im(ΠE) = im(EΠ)", a.sub == b.sub)
    A, B = a.result, b.result
    for name, x, y in (("multiplication", A.mult, B.mult), ("comultiplication", A.comult, B.comult)):
        rep.add(f"same {name}", "structure constants equal", x == y)
    rep.add("same unit", "structure constants equal", A.unit == B.unit)
    rep.add("same counit", "structure constants equal", A.counit == B.counit)
    sa, sb = A.antipode, B.antipode
    rep.add("same antipode", "structure constants equal", (sa is None and sb is None) or (sa is not None and sa == sb))
    return rep


# duality -----------------------------------------------------------------

@dataclass(eq=False)
class ThetaResult:
    report: Report
    theta: Matrix | None = None
    mirrored: HopfData | None = None
    dual: HopfData | None = None


def mirrored_bismash(p: PartialMatchedPair, check: bool = True) -> tuple[HopfData, BismashHopf, Report]:
    """H*#̲‾L* on H*⊗L*: the bismash of the reflected left pair, reflected back (op and cop)."""
    mp = dual_pair(p)
    rep = check_mirrored_pair(mp) if check else Report("mirrored pair")
    if check and not (mp.flags.get("pmp_ok") and mp.flags.get("quasi_abelian_ok")):
        raise CheckRefused("dual pair fails the mirrored axioms", rep)
    q = mp.reflected()
    for k in ("pmp_ok", "quasi_abelian_ok"):
        if mp.flags.get(k) is not None:
            q.flags.set(k, mp.flags.get(k), "mirrored_bismash")
    bq = bismash(q, derived=False)
    R = bq.result
    M = op_cop(R).renamed(f"{p.H.name}*#̲‾{p.L.name}*")
    return M, bq, rep


def theta_iso(p: PartialMatchedPair) -> ThetaResult:
    """θ(φ#f)(x#̲‾h) = ε_H(h1⁰) φ(h3) f(x h1¹(h2 ⇀ 1)) as a map H*#̲‾L* -> (L#̲‾H)*."""
    _refuse_unless_quasi_abelian(p)
    b = bismash(p, derived=False)
    if b.result.antipode is None:
        raise CheckRefused("θ needs the antipode antipode conditions", b.report)
    rep = Report(f"duality isomorphism {p.name}")
    F = p.field
    nH, nL = p.H.dim, p.L.dim
    mirror, bq, mrep = mirrored_bismash(p)
    rep.extend(mrep, "dual pair: ")
    rep.extend(bq.report, "mirrored bismash: ")
    rep.extend(check_bialgebra(mirror), "H*#̲‾L*: ")
    rep.extend(check_antipode(mirror), "H*#̲‾L*: ")
    dual = dual_hopf(b.result)
    d = b.sub.dim
    Wq = bq.sub
    if Wq.dim != d:
        rep.add("dimensions agree", "dim H*#̲‾L* = dim L#̲‾H", False, {"mirrored": Wq.dim, "bismash": d})
        return ThetaResult(rep, None, mirror, dual)
    # the displayed formula is (f⊗φ) applied to the normal form, which fixes result vectors
    normal_fixed = all(b.projection.apply(v) == v for v in b.sub.basis)
    rep.add("θ formula reads coordinates", "ε_H(h1⁰)φ(h3)f(x h1¹(h2⇀1)) = (f⊗φ)(x#̲‾h)", normal_fixed)
    z = F.zero
    data = [[z] * d for _ in range(d)]
    for m, beta in enumerate(Wq.basis):
        for k, bk in enumerate(b.sub.basis):
            s = z
            for ac, x in beta.items():
                a, c = divmod(ac, nL)
                y = bk.get(c * nH + a)
                if y:
                    s = s + x * y
            data[k][m] = s
    T = Matrix(F, d, d, data)
    bij = T.rank() == d
    rep.add("θ bijective", "rank θ = dim", bij)
    Tm = LinearMap.from_matrix(T)
    out = ThetaResult(rep, T, mirror, dual)
    if not bij:
        return out
    checks = [
        ("θ multiplicative", "θ(uv) = θ(u)θ(v)", Tm @ mirror.mult, dual.mult @ Tm.kron(Tm)),
        ("θ unital", "θ(1) = 1", Tm @ mirror.unit_map, dual.unit_map),
        ("θ comultiplicative", "Δθ = (θ⊗θ)Δ", Tm.kron(Tm) @ mirror.comult, dual.comult @ Tm),
        ("θ counital", "εθ = ε", dual.counit_map @ Tm, mirror.counit_map),
        ("θ commutes with antipodes", "θS = Sθ", Tm @ mirror.antipode, dual.antipode @ Tm),
    ]
    for name, anchor, x, y in checks:
        y = y.reshape(dom=x.dom, cod=x.cod)
        rep.add(name, anchor, x == y, None if x == y else {"first difference": str(x.first_difference(y))})
    # displayed inverse: θ⁻¹(ξ) = Σ_i h_i* #̲‾ ξ_i with ξ_i(x) = ξ(x #̲‾ h_i)
    Pq = bq.projection
    cols = []
    for k in range(d):
        amb: dict = {}
        for i in range(nH):
            for c in range(nL):
                xi = b.sub.coords(b.projection.cols[c * nH + i]).get(k)
                if xi:
                    for w, v in Pq.cols[i * nL + c].items():
                        amb[w] = amb.get(w, z) + xi * v
        amb = {w: v for w, v in amb.items() if v}
        cols.append(Wq.coords(amb))
    Tinv = LinearMap(F, (d,), (d,), cols)
    ok = (Tm @ Tinv) == LinearMap.identity(F, (d,))
    rep.add("θ⁻¹ formula", "θ⁻¹(ξ) = Σ_i h_i* #̲‾ ξ_i inverts θ", ok)
    return out
