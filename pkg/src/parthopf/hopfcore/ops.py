"""Constructions on Hopf data: convolution, antipode solving, duals, tensor
products, opposite structures and changes of basis."""
from __future__ import annotations

from dataclasses import replace

from ..exactmath import DependencyTracker, FieldMismatch, LinearMap, Matrix, add_into, solve_linear
from .data import AlgebraData, CoalgebraData, HopfData


def convolution(f: LinearMap, g: LinearMap, C: CoalgebraData, A: AlgebraData) -> LinearMap:
    """m ∘ (f ⊗ g) ∘ Δ as a map C -> A."""
    for name, h in (("f", f), ("g", g)):
        if h.in_dim != C.dim or h.out_dim != A.dim:
            raise ValueError(f"{name} must map dim {C.dim} to dim {A.dim}, got {h.in_dim} -> {h.out_dim}")
    n = C.dim
    cols = []
    for col in C.comult.cols:
        out: dict = {}
        for jk, c in col.items():
            j, k = divmod(jk, n)
            fj, gk = f.cols[j], g.cols[k]
            if not fj or not gk:
                continue
            for a, x in A.product(fj, gk).items():
                add_into(out, a, c * x)
        cols.append(out)
    return LinearMap(A.field, (C.dim,), (A.dim,), cols)


def counit_unit(B: HopfData) -> LinearMap:
    """u∘ε, the unit of the convolution algebra End(B)."""
    u = dict(B.unit)
    cols = []
    for i in range(B.dim):
        e = B.counit.get(i)
        cols.append({k: e * v for k, v in u.items()} if e else {})
    return LinearMap(B.field, (B.dim,), (B.dim,), cols)


def _flat(M: LinearMap) -> dict:
    n = M.out_dim
    return {j * n + i: x for j, col in enumerate(M.cols) for i, x in col.items()}


def solve_antipode(B: HopfData) -> LinearMap | None:
    """Convolution inverse of the identity, or None when it does not exist.

    Uses the minimal polynomial of id in the convolution algebra: if
    id^k = sum_{j<k} c_j id^j with c_0 != 0 then
    S = (id^{k-1} - sum_{1<=j<k} c_j id^{j-1}) / c_0.
    """
    F = B.field
    ident = LinearMap.identity(F, (B.dim,))
    powers = [counit_unit(B)]
    tracker = DependencyTracker(F)
    tracker.add(_flat(powers[0]))
    while True:
        nxt = convolution(powers[-1], ident, B.coalgebra, B.algebra)
        dep = tracker.add(_flat(nxt))
        if dep is not None:
            break
        powers.append(nxt)
    if not dep[0]:
        return None
    k = len(powers)
    S = powers[k - 1]
    for j in range(1, k):
        if dep[j]:
            S = S - powers[j - 1].scale(dep[j])
    return S.scale(F.one / dep[0])


def antipode_solution_space(B: HopfData) -> tuple[LinearMap | None, int]:
    """Solve both convolution identities as one linear system in the n² entries of S.

    Returns (a solution or None, nullity of the homogeneous system).  A
    nullity of 0 means the antipode, when it exists, is unique.
    """
    F, n = B.field, B.dim
    # unknown S[k][j] (image of e_j at e_k) sits at column j*n + k
    rows: list[list] = []
    rhs: list = []
    unit = B.unit
    for i in range(n):
        eq_l = [dict() for _ in range(n)]  # eq_l[r] : coefficient dict for output coordinate r
        eq_r = [dict() for _ in range(n)]
        for jk, c in B.comult.cols[i].items():
            j, k = divmod(jk, n)
            # m(S e_j ⊗ e_k) = sum_a S[a][j] m(e_a, e_k)
            for a in range(n):
                for r, x in B.mult.cols[a * n + k].items():
                    add_into(eq_l[r], j * n + a, c * x)
                for r, x in B.mult.cols[j * n + a].items():
                    add_into(eq_r[r], k * n + a, c * x)
        e = B.counit.get(i, F.zero)
        for eqs in (eq_l, eq_r):
            for r in range(n):
                row = [F.zero] * (n * n)
                for col, x in eqs[r].items():
                    row[col] = x
                rows.append(row)
                rhs.append(e * unit.get(r, F.zero))
    A = Matrix(F, len(rows), n * n, rows)
    nullity = n * n - A.rank()
    sol = solve_linear(A, Matrix(F, len(rhs), 1, [[v] for v in rhs]))
    if sol is None:
        return None, nullity
    vals = [sol.data[t][0] for t in range(n * n)]
    cols = [{a: vals[j * n + a] for a in range(n) if vals[j * n + a]} for j in range(n)]
    return LinearMap(F, (n,), (n,), cols), nullity


def _star(labels) -> tuple:
    return tuple(l + "*" for l in labels)


def dual_hopf(B: HopfData, labels=None) -> HopfData:
    """The dual Hopf algebra on the dual basis."""
    labels = tuple(labels) if labels is not None else _star(B.labels)
    F, n = B.field, B.dim
    mult = B.comult.transpose()
    comult = B.mult.transpose()
    A = AlgebraData(F, n, mult, dict(B.counit), labels, B.coalgebra.counital, B.coalgebra.counital)
    C = CoalgebraData(F, n, comult, dict(B.unit), labels, B.algebra.unital, B.algebra.unital)
    S = B.antipode.transpose() if B.antipode is not None else None
    return HopfData(A, C, S, f"({B.name})*", dict(B.meta))


def tensor_hopf(A: HopfData, B: HopfData, name: str | None = None) -> HopfData:
    if A.field != B.field:
        raise FieldMismatch("tensor product of Hopf algebras over different fields")
    F, na, nb = A.field, A.dim, B.dim
    n = na * nb
    P_in = LinearMap.permutation(F, (na, nb, na, nb), (0, 2, 1, 3))
    mult = (A.mult.kron(B.mult) @ P_in).reshape(dom=(n, n), cod=(n,))
    P_out = LinearMap.permutation(F, (na, na, nb, nb), (0, 2, 1, 3))
    comult = (P_out @ A.comult.kron(B.comult)).reshape(dom=(n,), cod=(n, n))
    unit: dict = {}
    for i, x in A.unit.items():
        for j, y in B.unit.items():
            unit[i * nb + j] = x * y
    counit: dict = {}
    for i, x in A.counit.items():
        for j, y in B.counit.items():
            counit[i * nb + j] = x * y
    labels = tuple(f"{a}⊗{b}" for a in A.labels for b in B.labels)
    S = A.antipode.kron(B.antipode).reshape(dom=(n,), cod=(n,)) if (A.antipode is not None and B.antipode is not None) else None
    return HopfData(
        AlgebraData(F, n, mult, unit, labels),
        CoalgebraData(F, n, comult, counit, labels),
        S,
        name or f"{A.name}⊗{B.name}",
    )


def _inverse_map(S: LinearMap) -> LinearMap:
    M = S.to_matrix()
    if M.rank() != M.rows:
        raise ValueError("antipode is not invertible")
    return LinearMap.from_matrix(M.inverse())


def _flip(F, n) -> LinearMap:
    return LinearMap.permutation(F, (n, n), (1, 0))


def opposite(B: HopfData) -> HopfData:
    """Reversed multiplication; antipode S⁻¹."""
    if B.antipode is None:
        raise ValueError("opposite needs an antipode")
    Sinv = _inverse_map(B.antipode)
    m = B.mult @ _flip(B.field, B.dim)
    return HopfData(replace(B.algebra, mult=m), B.coalgebra, Sinv, f"{B.name}^op", dict(B.meta))


def coopposite(B: HopfData) -> HopfData:
    """Reversed comultiplication; antipode S⁻¹."""
    if B.antipode is None:
        raise ValueError("coopposite needs an antipode")
    Sinv = _inverse_map(B.antipode)
    D = _flip(B.field, B.dim) @ B.comult
    return HopfData(B.algebra, replace(B.coalgebra, comult=D), Sinv, f"{B.name}^cop", dict(B.meta))


def op_cop(B: HopfData) -> HopfData:
    """Both reversed; the antipode is unchanged."""
    fl = _flip(B.field, B.dim)
    return HopfData(
        replace(B.algebra, mult=B.mult @ fl),
        replace(B.coalgebra, comult=fl @ B.comult),
        B.antipode,
        f"{B.name}^op,cop",
        dict(B.meta),
    )


def change_basis(B: HopfData, P: Matrix, labels=None, name: str | None = None) -> HopfData:
    """Re-express B in the basis given by the columns of the invertible matrix P."""
    F, n = B.field, B.dim
    if P.rows != n or P.cols != n or P.rank() != n:
        raise ValueError("change of basis needs an invertible dim x dim matrix")
    Pm = LinearMap.from_matrix(P)
    Pi = LinearMap.from_matrix(P.inverse())
    mult = Pi @ B.mult @ Pm.kron(Pm)
    comult = Pi.kron(Pi) @ B.comult @ Pm
    unit = Pi.apply(B.unit)
    counit_row = (B.counit_map @ Pm).cols
    counit = {j: c[0] for j, c in enumerate(counit_row) if c.get(0)}
    labels = tuple(labels) if labels is not None else tuple(f"f{j}" for j in range(n))
    S = (Pi @ B.antipode @ Pm) if B.antipode is not None else None
    return HopfData(
        AlgebraData(F, n, mult, unit, labels, B.algebra.unital, B.algebra.left_unital),
        CoalgebraData(F, n, comult, counit, labels, B.coalgebra.counital, B.coalgebra.right_counital),
        S,
        name if name is not None else B.name,
        dict(B.meta),
    )


def permute_basis(B: HopfData, perm) -> HopfData:
    """Basis reordering: new basis element j is old element perm[j]."""
    F, n = B.field, B.dim
    P = Matrix.zeros(F, n, n)
    for j, p in enumerate(perm):
        P.data[p][j] = F.one
    return change_basis(B, P, [B.labels[p] for p in perm])


def is_identity(M: LinearMap) -> bool:
    return M == LinearMap.identity(M.field, (M.in_dim,))

