"""Axiom verification over all basis tuples.

Every identity is written as two composed maps on named tensor legs and
compared with :func:`compare_maps`; the first mismatch becomes the witness.
"""
from __future__ import annotations

import random
import time
from dataclasses import replace
from typing import Callable, Sequence

from ..exactmath import Field, LinearMap, Tensor, compare_maps
from ..report import Report
from .data import AlgebraData, CoalgebraData, HopfData, format_vector


def format_tensor(T: Tensor, labels: Sequence[Sequence[str]] | Sequence[str]) -> str:
    """Readable form of a small tensor; ``labels`` is one label list per leg (or one shared list)."""
    if not T.data:
        return "0"
    per_leg = labels if (labels and not isinstance(labels[0], str)) else [labels] * len(T.legs)
    parts = []
    for key in sorted(T.data):
        c = T.data[key]
        word = "⊗".join(per_leg[p][i] for p, i in enumerate(key)) if key else "1"
        cs = str(T.field.encode(c)) if not isinstance(T.field.encode(c), list) else str(c)
        parts.append(word if cs == "1" else f"-{word}" if cs == "-1" else f"({cs}){word}")
    return " + ".join(parts).replace("+ -", "- ")


def witness_from(mismatch, names: Sequence[str], in_labels: Sequence[Sequence[str]], out_labels) -> dict:
    idx, a, b = mismatch
    w = {n: in_labels[k][i] for k, (n, i) in enumerate(zip(names, idx))}
    w["lhs"] = format_tensor(a, out_labels) if a.legs else format_tensor(a, [])
    w["rhs"] = format_tensor(b, out_labels) if b.legs else format_tensor(b, [])
    return w


def run_identity(rep: Report, name: str, anchor: str, field: Field, inputs, lhs, rhs, out_legs,
                 in_labels, out_labels) -> bool:
    """Compare two composed maps and record the outcome as one report line."""
    t0 = time.perf_counter()
    mm = compare_maps(lhs, rhs, field, inputs, out_legs)
    ok = mm is None
    w = None if ok else witness_from(mm, [n for n, _ in inputs], in_labels, out_labels)
    rep.add(name, anchor, ok, w, seconds=time.perf_counter() - t0)
    return ok


def check_algebra(A: AlgebraData, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    rep = rep if rep is not None else Report("algebra")
    F, n, m, u, L = A.field, A.dim, A.mult, A.unit_map, A.labels
    ok = run_identity(
        rep, "associativity", "(ab)c = a(bc)", F, [("a", n), ("b", n), ("c", n)],
        lambda t: t.apply(m, ("a", "b"), ("a",)).apply(m, ("a", "c"), ("r",)),
        lambda t: t.apply(m, ("b", "c"), ("b",)).apply(m, ("a", "b"), ("r",)),
        ("r",), [L, L, L], [L],
    )
    if stop_on_fail and not ok:
        return rep
    if A.unital or A.left_unital:
        ok = run_identity(
            rep, "left unit", "1a = a", F, [("a", n)],
            lambda t: t.apply(u, (), ("u",), at=0).apply(m, ("u", "a"), ("a",)),
            lambda t: t, ("a",), [L], [L],
        )
        if stop_on_fail and not ok:
            return rep
    if A.unital:
        run_identity(
            rep, "right unit", "a1 = a", F, [("a", n)],
            lambda t: t.apply(u, (), ("u",)).apply(m, ("a", "u"), ("a",)),
            lambda t: t, ("a",), [L], [L],
        )
    return rep


def check_coalgebra(C: CoalgebraData, mode: str = "full", rep: Report | None = None,
                    stop_on_fail: bool = False) -> Report:
    """mode: 'full' (both counit laws), 'right' ((id⊗ε)Δ = id only), or 'none'."""
    if mode not in ("full", "right", "none"):
        raise ValueError(f"unknown counit mode {mode!r}")
    rep = rep if rep is not None else Report("coalgebra")
    F, n, D, e, L = C.field, C.dim, C.comult, C.counit_map, C.labels
    ok = run_identity(
        rep, "coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", F, [("c", n)],
        lambda t: t.apply(D, ("c",), ("p", "q")).apply(D, ("p",), ("a", "b")),
        lambda t: t.apply(D, ("c",), ("a", "r")).apply(D, ("r",), ("b", "q")),
        ("a", "b", "q"), [L], [L, L, L],
    )
    if stop_on_fail and not ok:
        return rep
    if mode in ("full", "right"):
        ok = run_identity(
            rep, "right counit", "(id⊗ε)Δ = id", F, [("c", n)],
            lambda t: t.apply(D, ("c",), ("c", "r")).apply(e, ("r",), ()),
            lambda t: t, ("c",), [L], [L],
        )
        if stop_on_fail and not ok:
            return rep
    if mode == "full":
        run_identity(
            rep, "left counit", "(ε⊗id)Δ = id", F, [("c", n)],
            lambda t: t.apply(D, ("c",), ("r", "c")).apply(e, ("r",), ()),
            lambda t: t, ("c",), [L], [L],
        )
    return rep


def _counit_mode(C: CoalgebraData) -> str:
    if C.counital:
        return "full"
    return "right" if C.right_counital else "none"


def check_bialgebra(B: HopfData, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    rep = rep if rep is not None else Report(f"bialgebra {B.name}".strip())
    check_algebra(B.algebra, rep, stop_on_fail)
    if stop_on_fail and not rep.passed:
        return rep
    check_coalgebra(B.coalgebra, _counit_mode(B.coalgebra), rep, stop_on_fail)
    if stop_on_fail and not rep.passed:
        return rep
    F, n, m, D, u, e, L = B.field, B.dim, B.mult, B.comult, B.unit_map, B.counit_map, B.labels
    checks = [
        ("Δ multiplicative", "Δ(ab) = Δ(a)Δ(b)", [("a", n), ("b", n)],
         lambda t: t.apply(m, ("a", "b"), ("p",)).apply(D, ("p",), ("x", "y")),
         lambda t: (t.apply(D, ("a",), ("a1", "a2")).apply(D, ("b",), ("b1", "b2"))
                    .apply(m, ("a1", "b1"), ("x",)).apply(m, ("a2", "b2"), ("y",))),
         ("x", "y"), [L, L], [L, L]),
        ("Δ unital", "Δ(1) = 1⊗1", [],
         lambda t: t.apply(u, (), ("p",)).apply(D, ("p",), ("x", "y")),
         lambda t: t.apply(u, (), ("x",)).apply(u, (), ("y",)),
         ("x", "y"), [], [L, L]),
        ("ε multiplicative", "ε(ab) = ε(a)ε(b)", [("a", n), ("b", n)],
         lambda t: t.apply(m, ("a", "b"), ("p",)).apply(e, ("p",), ()),
         lambda t: t.apply(e, ("a",), ()).apply(e, ("b",), ()),
         (), [L, L], []),
        ("ε unital", "ε(1) = 1", [],
         lambda t: t.apply(u, (), ("p",)).apply(e, ("p",), ()),
         lambda t: t, (), [], []),
    ]
    for name, anchor, inputs, lhs, rhs, outs, il, ol in checks:
        ok = run_identity(rep, name, anchor, F, inputs, lhs, rhs, outs, il, ol)
        if stop_on_fail and not ok:
            return rep
    return rep


def check_antipode(B: HopfData, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    rep = rep if rep is not None else Report(f"antipode {B.name}".strip())
    if B.antipode is None:
        rep.add("antipode present", "S exists", False, None, "no antipode supplied")
        return rep
    F, n, m, D, u, e, S, L = B.field, B.dim, B.mult, B.comult, B.unit_map, B.counit_map, B.antipode, B.labels
    ok = run_identity(
        rep, "S * id = uε", "m(S⊗id)Δ = uε", F, [("c", n)],
        lambda t: t.apply(D, ("c",), ("p", "q")).apply(S, ("p",), ("p",)).apply(m, ("p", "q"), ("r",)),
        lambda t: t.apply(e, ("c",), ()).apply(u, (), ("r",)),
        ("r",), [L], [L],
    )
    if stop_on_fail and not ok:
        return rep
    run_identity(
        rep, "id * S = uε", "m(id⊗S)Δ = uε", F, [("c", n)],
        lambda t: t.apply(D, ("c",), ("p", "q")).apply(S, ("q",), ("q",)).apply(m, ("p", "q"), ("r",)),
        lambda t: t.apply(e, ("c",), ()).apply(u, (), ("r",)),
        ("r",), [L], [L],
    )
    return rep


def check_hopf(B: HopfData, rep: Report | None = None, stop_on_fail: bool = False) -> Report:
    rep = rep if rep is not None else Report(f"hopf {B.name}".strip())
    check_bialgebra(B, rep, stop_on_fail)
    if stop_on_fail and not rep.passed:
        return rep
    return check_antipode(B, rep, stop_on_fail)


# mutation harness ---------------------------------------------------------

SLOTS = ("mult", "unit", "comult", "counit", "antipode")


def mutate(B: HopfData, rng: random.Random, delta=None) -> tuple[HopfData, str]:
    """Change one structure constant (possibly a zero one) by a nonzero amount."""
    F, n = B.field, B.dim
    sizes = {"mult": n ** 3, "unit": n, "comult": n ** 3, "counit": n, "antipode": n * n if B.antipode else 0}
    total = sum(sizes.values())
    r = rng.randrange(total)
    for slot in SLOTS:
        if r < sizes[slot]:
            break
        r -= sizes[slot]
    d = F(delta) if delta is not None else F(rng.choice([1, -1, 2, 3]))

    def bump(col: dict, k: int) -> dict:
        col = dict(col)
        v = col.get(k, F.zero) + d
        if v:
            col[k] = v
        else:
            col.pop(k, None)
        return col

    def bump_map(M: LinearMap, j: int, k: int) -> LinearMap:
        cols = list(M.cols)
        cols[j] = bump(cols[j], k)
        return LinearMap(F, M.dom, M.cod, cols)

    L = B.labels
    if slot == "mult":
        ij, k = divmod(r, n)
        i, j = divmod(ij, n)
        A = replace(B.algebra, mult=bump_map(B.mult, ij, k))
        A.__dict__.pop("unit_map", None)
        return replace(B, algebra=A), f"mult[{L[i]},{L[j]}]->{L[k]} += {F.encode(d)}"
    if slot == "unit":
        A = replace(B.algebra, unit=bump(B.unit, r))
        return replace(B, algebra=A), f"unit[{L[r]}] += {F.encode(d)}"
    if slot == "comult":
        i, jk = divmod(r, n * n)
        j, k = divmod(jk, n)
        C = replace(B.coalgebra, comult=bump_map(B.comult, i, jk))
        return replace(B, coalgebra=C), f"comult[{L[i]}]->{L[j]}⊗{L[k]} += {F.encode(d)}"
    if slot == "counit":
        C = replace(B.coalgebra, counit=bump(B.counit, r))
        return replace(B, coalgebra=C), f"counit[{L[r]}] += {F.encode(d)}"
    i, k = divmod(r, n)
    return replace(B, antipode=bump_map(B.antipode, i, k)), f"S[{L[i]}]->{L[k]} += {F.encode(d)}"
