"""Finite groups given by Cayley tables."""
from __future__ import annotations

from itertools import permutations, product
from typing import Sequence


class GroupPresentation:
    """A finite group as a multiplication table on indices 0..order-1."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str], name: str = ""):
        self.table = tuple(tuple(r) for r in table)
        self.labels = tuple(labels)
        self.name = name
        self.order = len(self.table)
        n = self.order
        if len(self.labels) != n or any(len(r) != n for r in self.table):
            raise ValueError("Cayley table must be square with one label per element")
        if len(set(self.labels)) != n:
            raise ValueError("group labels must be distinct")
        if any(not (0 <= x < n) for r in self.table for x in r):
            raise ValueError("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g == self.table[g][e] for g in range(n))]
        if len(ids) != 1:
            raise ValueError("table has no two-sided identity")
        self.identity = ids[0]
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError(f"table is not associative at {self.labels[a]},{self.labels[b]},{self.labels[c]}")
        inv = []
        for g in range(n):
            hs = [h for h in range(n) if self.table[g][h] == self.identity]
            if len(hs) != 1 or self.table[hs[0]][g] != self.identity:
                raise ValueError(f"{self.labels[g]} has no inverse")
            inv.append(hs[0])
        self._inv = tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        r = self.identity
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            r = self.mul(r, base)
        return r

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of {self.name}; elements are {list(self.labels)}") from None

    def subset(self, items) -> tuple[int, ...]:
        """Indices from a comma-separated label string or an iterable of labels/indices."""
        if isinstance(items, str):
            items = [s.strip() for s in items.split(",") if s.strip()]
        out = sorted({self.index(s) if isinstance(s, str) else int(s) for s in items})
        return tuple(out)

    def is_subgroup(self, S: Sequence[int]) -> bool:
        S = set(S)
        return self.identity in S and all(self.mul(a, self.inv(b)) in S for a in S for b in S)

    def is_normal(self, S: Sequence[int]) -> bool:
        S = set(S)
        return self.is_subgroup(S) and all(self.mul(self.mul(g, s), self.inv(g)) in S for g in range(self.order) for s in S)

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))

    def subgroup_generated(self, gens: Sequence[int]) -> tuple[int, ...]:
        S = {self.identity}
        frontier = list(S)
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = self.mul(s, g)
                    if t not in S:
                        S.add(t)
                        nxt.append(t)
            frontier = nxt
        return tuple(sorted(S))

    def __repr__(self) -> str:
        return f"GroupPresentation({self.name or self.order})"


def _power_label(gen: str, k: int) -> str:
    return "e" if k == 0 else gen if k == 1 else f"{gen}{k}"


def cyclic(n: int, gen: str = "c") -> GroupPresentation:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupPresentation(table, [_power_label(gen, k) for k in range(n)], f"C{n}")


def direct_product(G: GroupPresentation, H: GroupPresentation, name: str | None = None) -> GroupPresentation:
    """Elements (g, h) at index g*|H| + h, labelled by juxtaposition with e dropped."""
    m = H.order
    table = [
        [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    labels = []
    for g in G.labels:
        for h in H.labels:
            parts = [p for p in (g, h) if p != "e"]
            labels.append("".join(parts) if parts else "e")
    return GroupPresentation(table, labels, name or f"{G.name}x{H.name}")


def klein() -> GroupPresentation:
    return direct_product(cyclic(2, "a"), cyclic(2, "b"), "C2xC2")


def dihedral(n: int) -> GroupPresentation:
    """D_n of order 2n: elements r^k s^j at index j*n + k, with s r s = r^-1."""
    if n < 2:
        raise ValueError("dihedral group needs n >= 2")
    N = 2 * n

    def mul(a, b):
        ja, ka = divmod(a, n)
        jb, kb = divmod(b, n)
        k = (ka + (kb if ja == 0 else -kb)) % n
        return ((ja + jb) % 2) * n + k

    labels = []
    for j in range(2):
        for k in range(n):
            r = "" if k == 0 else "r" if k == 1 else f"r{k}"
            s = "s" if j else ""
            labels.append((r + s) or "e")
    return GroupPresentation([[mul(a, b) for b in range(N)] for a in range(N)], labels, f"D{n}")


def _cycle_label(p: tuple) -> str:
    n = len(p)
    seen, parts = set(), []
    for i in range(n):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> GroupPresentation:
    """S_n (n <= 4) with (στ)(i) = σ(τ(i)); elements ordered by cycle type then label."""
    if not 1 <= n <= 4:
        raise ValueError("symmetric groups are provided for n <= 4")
    perms = list(permutations(range(n)))

    def moved(p):
        return sum(1 for i in range(n) if p[i] != i)

    perms.sort(key=lambda p: (moved(p), _cycle_label(p)))
    idx = {p: k for k, p in enumerate(perms)}
    table = [[idx[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    return GroupPresentation(table, [_cycle_label(p) for p in perms], f"S{n}")


def alternating_subgroup(G: GroupPresentation) -> tuple[int, ...]:
    """Even permutations of a symmetric group built by :func:`symmetric`."""
    out = []
    for k, lab in enumerate(G.labels):
        if lab == "e":
            out.append(k)
            continue
        cycles = lab.strip("()").split(")(")
        if sum(len(c) - 1 for c in cycles) % 2 == 0:
            out.append(k)
    return tuple(out)


def group_by_name(name: str) -> GroupPresentation:
    """C<n>, D<n>, S3, S4, K4 / C2xC2."""
    key = name.strip().upper().replace("×", "X")
    if key in ("K4", "C2XC2", "V4"):
        return klein()
    if key.startswith("C") and key[1:].isdigit():
        return cyclic(int(key[1:]))
    if key.startswith("D") and key[1:].isdigit():
        return dihedral(int(key[1:]))
    if key in ("S3", "S4", "S2", "S1"):
        return symmetric(int(key[1:]))
    raise KeyError(f"unknown group {name!r}; use Cn, Dn, S3, S4 or C2xC2")
