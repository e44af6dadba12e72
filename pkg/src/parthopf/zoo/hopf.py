"""The Hopf algebras used by the examples: group algebras, their duals and
small pointed Hopf algebras generated by grouplikes and one skew-primitive."""
from __future__ import annotations

from dataclasses import replace
from typing import Callable

from ..exactmath import QQ, Field, Matrix
from ..hopfcore import HopfData, change_basis, make_hopf, tensor_hopf
from .groups import GroupPresentation, cyclic, direct_product


def group_algebra(G: GroupPresentation, F: Field = QQ) -> HopfData:
    return make_hopf(
        F, G.labels,
        lambda i, j: {G.mul(i, j): 1},
        {G.identity: 1},
        lambda i: {(i, i): 1},
        {i: 1 for i in range(G.order)},
        lambda i: {G.inv(i): 1},
        name=f"k{G.name}",
        meta={"group": G.name},
    )


def dual_group_algebra(G: GroupPresentation, F: Field = QQ) -> HopfData:
    """Functions on G in the basis of point indicators p_g."""
    n = G.order
    return make_hopf(
        F, [f"p_{l}" for l in G.labels],
        lambda i, j: {i: 1} if i == j else {},
        {i: 1 for i in range(n)},
        lambda g: {(a, G.mul(G.inv(a), g)): 1 for a in range(n)},
        {G.identity: 1},
        lambda i: {G.inv(i): 1},
        name=f"k{G.name}*",
        meta={"group": G.name},
    )


def _require_char_not_2(F: Field, what: str) -> None:
    if F.characteristic == 2:
        raise ValueError(f"{what} needs a field of characteristic different from 2")


def pointed_rank_one(
    Gamma: GroupPresentation,
    w: int,
    chi: Callable[[int], object],
    F: Field = QQ,
    gen: str = "x",
    x_left: bool = False,
    name: str = "",
) -> HopfData:
    """kΓ[x] with x² = 0, xγ = χ(γ)γx and Δx = x⊗1 + w⊗x.

    Needs Γ abelian and χ(w) = -1.  The default basis is {γ, γx}; with
    ``x_left`` it is {γ, xγ}.
    """
    _require_char_not_2(F, name or "this Hopf algebra")
    if not Gamma.is_abelian():
        raise ValueError("the grouplike part must be abelian")
    chis = [F(chi(g)) for g in range(Gamma.order)]
    for a in range(Gamma.order):
        for b in range(Gamma.order):
            if chis[Gamma.mul(a, b)] != chis[a] * chis[b]:
                raise ValueError("chi is not a character")
    if chis[w] != -F.one:
        raise ValueError("chi(w) must be -1 for x to square to zero compatibly")
    m = Gamma.order
    winv = Gamma.inv(w)

    def idx(g, a):
        return a * m + g

    def mult(i, j):
        a, g = divmod(i, m)
        b, h = divmod(j, m)
        if a + b > 1:
            return {}
        c = chis[h] if a else F.one
        return {idx(Gamma.mul(g, h), a + b): c}

    def comult(i):
        a, g = divmod(i, m)
        if a == 0:
            return {(i, i): 1}
        return {(idx(g, 1), idx(g, 0)): 1, (idx(Gamma.mul(g, w), 0), idx(g, 1)): 1}

    def antipode(i):
        a, g = divmod(i, m)
        gi = Gamma.inv(g)
        if a == 0:
            return {idx(gi, 0): 1}
        return {idx(Gamma.mul(winv, gi), 1): -F.one / chis[g]}

    def lab(g, a):
        gl = "" if g == Gamma.identity else Gamma.labels[g]
        if a == 0:
            return gl or "1"
        return (gen + gl) if x_left else (gl + gen)

    labels = [lab(g, a) for a in range(2) for g in range(m)]
    B = make_hopf(F, labels, mult, {idx(Gamma.identity, 0): 1}, comult, {idx(g, 0): 1 for g in range(m)},
                  antipode, name=name, meta={"grouplikes": Gamma.name})
    if not x_left:
        return B
    # x γ = χ(γ) γ x
    P = Matrix.zeros(F, 2 * m, 2 * m)
    for g in range(m):
        P.data[idx(g, 0)][idx(g, 0)] = F.one
        P.data[idx(g, 1)][idx(g, 1)] = chis[g]
    return change_basis(B, P, labels, name)


def sweedler_h4(F: Field = QQ) -> HopfData:
    """Basis {1, c, x, xc}: c² = 1, x² = 0, cx = -xc, Δx = x⊗1 + c⊗x."""
    C2 = cyclic(2, "c")
    return pointed_rank_one(C2, 1, lambda g: -1 if g else 1, F, "x", x_left=True, name="H4")


def a22(F: Field = QQ) -> HopfData:
    """Basis {1,g,h,gh,x,gx,hx,ghx}: g² = h² = 1, x² = 0, g,h anticommute with x, Δx = x⊗1 + g⊗x."""
    K = direct_product(cyclic(2, "g"), cyclic(2, "h"), "C2xC2")
    w = K.index("g")
    return pointed_rank_one(K, w, lambda k: (-1) ** (k // 2 + k % 2), F, "x", name="A22")


def a4prime(F: Field = QQ) -> HopfData:
    """Basis {c^a y^b}: c⁴ = 1, y² = 0, cy = -yc, Δy = y⊗1 + c⊗y."""
    C4 = cyclic(4, "c")
    return pointed_rank_one(C4, 1, lambda g: (-1) ** g, F, "y", name="A4'")


def fourth_root(F: Field):
    q = F.primitive_root_of_unity(4)
    if q is None:
        raise ValueError(f"{F} has no primitive fourth root of unity; use Q(i) or GF(p) with p = 1 mod 4")
    return q


def h16(F: Field) -> HopfData:
    """Basis {g^a h^b x^c}: g⁴ = h² = 1, gh = hg, x² = 0, xg = qgx, xh = hx, Δx = x⊗1 + g²h⊗x."""
    q = fourth_root(F)
    G = direct_product(cyclic(4, "g"), cyclic(2, "h"), "C4xC2")
    w = G.index("g2h")
    B = pointed_rank_one(G, w, lambda k: q ** (k // 2), F, "x", name="H16")
    return replace(B, meta={**B.meta, "q": F.encode(q)})


def h4_tensor_h4(F: Field = QQ) -> HopfData:
    return tensor_hopf(sweedler_h4(F), sweedler_h4(F), "H4⊗H4")


def h4_tensor_a22(F: Field = QQ) -> HopfData:
    return tensor_hopf(sweedler_h4(F), a22(F), "H4⊗A22")
