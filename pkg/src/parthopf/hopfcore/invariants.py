"""Grouplikes, integrals and invariant fingerprints."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from ..exactmath import Matrix, identity, kernel_basis, minpoly_factor_characters, rref_rows
from ..report import Report
from .data import HopfData, _scalar_str, dense_to_sparse


def _span_rows(F, vecs: list[list], n: int) -> list[list]:
    red, piv = rref_rows(F, vecs, n)
    return [list(r) for r in red[: len(piv)]]


def commutator_ideal_of_dual(B: HopfData) -> list[list]:
    """Basis (dense rows) of the two-sided ideal of B* generated by commutators."""
    F, n = B.field, B.dim
    D = B.comult.cols

    def dual_prod(u: list, v: list) -> list:
        # (u v)(e_l) = sum_{i,j} u_i v_j Δ_l[(i,j)]
        out = [F.zero] * n
        for l in range(n):
            s = F.zero
            for ij, c in D[l].items():
                i, j = divmod(ij, n)
                if u[i] and v[j]:
                    s = s + u[i] * v[j] * c
            out[l] = s
        return out

    basis = [[F.one if k == i else F.zero for k in range(n)] for i in range(n)]
    gens = []
    for a in range(n):
        for b in range(a + 1, n):
            x, y = dual_prod(basis[a], basis[b]), dual_prod(basis[b], basis[a])
            d = [p - q for p, q in zip(x, y)]
            if any(d):
                gens.append(d)
    span = _span_rows(F, gens, n) if gens else []
    while True:
        more = list(span)
        for v in span:
            for e in basis:
                more.append(dual_prod(e, v))
                more.append(dual_prod(v, e))
        new = _span_rows(F, more, n) if more else []
        if len(new) == len(span):
            return span
        span = new


def grouplikes(B: HopfData) -> list[dict]:
    """Every g with Δg = g⊗g and ε(g) = 1 whose coordinates lie in the field.

    Grouplikes are the characters of B*.  They are found as joint
    eigenvectors of the transposed left multiplications of B*, searched on
    the annihilator of the commutator ideal where those operators commute.
    """
    F, n = B.field, B.dim
    ideal = commutator_ideal_of_dual(B)
    if ideal:
        W = kernel_basis(Matrix(F, len(ideal), n, ideal))
        if not W:
            return []
        W0 = Matrix.from_columns(F, W, n)
    else:
        W0 = identity(F, n)
    ops = []
    for i in range(n):
        data = [[F.zero] * n for _ in range(n)]
        for l in range(n):
            for ij, c in B.comult.cols[l].items():
                a, j = divmod(ij, n)
                if a == i:
                    data[j][l] = c
        ops.append(Matrix(F, n, n, data))
    out = []
    for vals in minpoly_factor_characters(ops, start=W0):
        g = dense_to_sparse(vals)
        if B.coproduct(g) != {(j, k): x * y for j, x in g.items() for k, y in g.items()} or B.counit_of(g) != F.one:
            raise ArithmeticError(f"eigen-character {vals} is not grouplike")
        out.append(g)
    out.sort(key=lambda g: [F.sort_key(g.get(i, F.zero)) for i in range(n)])
    return out


def _integral_system(B: HopfData, side: str) -> Matrix:
    F, n = B.field, B.dim
    rows = []
    for i in range(n):
        e = B.counit.get(i, F.zero)
        for r in range(n):
            row = [F.zero] * n
            for j in range(n):
                col = B.mult.cols[i * n + j] if side == "left" else B.mult.cols[j * n + i]
                v = col.get(r)
                if v:
                    row[j] = v
            if e:
                row[r] = row[r] - e
            rows.append(row)
    return Matrix(F, len(rows), n, rows)


def integral_basis(B: HopfData, side: str = "left") -> list[dict]:
    """Kernel of the stacked system x·t - ε(x)t (left) or t·x - ε(x)t (right)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return [dense_to_sparse(v) for v in kernel_basis(_integral_system(B, side))]


def antipode_order(B: HopfData, bound: int = 16):
    if B.antipode is None:
        return None
    M = B.antipode.to_matrix()
    I = identity(B.field, B.dim)
    P = M
    for k in range(1, bound + 1):
        if P == I:
            return k
        P = P @ M
    return f"none <= {bound}"


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    commutative: bool
    cocommutative: bool
    semisimple: bool
    left_integral_dim: int
    grouplike_count: int
    antipode_order: object
    trace_S: str
    trace_S2: str

    def as_dict(self) -> dict:
        return asdict(self)


def fingerprint(B: HopfData) -> Fingerprint:
    F = B.field
    ints = integral_basis(B, "left")
    semisimple = bool(ints) and bool(B.counit_of(ints[0]))
    if B.antipode is not None:
        M = B.antipode.to_matrix()
        tr1, tr2 = _scalar_str(F, M.trace()), _scalar_str(F, (M @ M).trace())
    else:
        tr1 = tr2 = "n/a"
    return Fingerprint(
        dim=B.dim,
        commutative=B.algebra.is_commutative(),
        cocommutative=B.coalgebra.is_cocommutative(),
        semisimple=semisimple,
        left_integral_dim=len(ints),
        grouplike_count=len(grouplikes(B)),
        antipode_order=antipode_order(B),
        trace_S=tr1,
        trace_S2=tr2,
    )


SUFFICIENCY_NOTE = (
    "fingerprint agreement is a necessary condition for a Hopf isomorphism; "
    "it is not claimed to be sufficient"
)


def fingerprint_compare(B: HopfData, C: HopfData, fb: Fingerprint | None = None,
                        fc: Fingerprint | None = None) -> Report:
    fb = fb or fingerprint(B)
    fc = fc or fingerprint(C)
    rep = Report(f"fingerprint {B.name} vs {C.name}")
    for key, a in fb.as_dict().items():
        b = getattr(fc, key)
        rep.add(key, "isomorphism invariant", a == b, None if a == b else {"left": a, "right": b})
    rep.notes.append(SUFFICIENCY_NOTE)
    return rep
