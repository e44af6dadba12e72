"""Subspaces of a coordinate space given by a reduced echelon basis.

The basis rows are in reduced row echelon form, so the coordinates of a
vector in the subspace are its entries at the pivot positions.  Every
coordinate read-off is verified by reconstruction.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .fields import Field
from .linmap import LinearMap, add_into
from .matrix import rref_rows


class NotInSubspace(ArithmeticError):
    """A vector expected to lie in a subspace does not."""


class Subspace:
    __slots__ = ("field", "ambient", "basis", "pivots", "_pivpos")

    def __init__(self, field: Field, ambient: int, basis: Sequence[Mapping], pivots: Sequence[int]):
        self.field = field
        self.ambient = ambient
        self.basis = [dict(b) for b in basis]
        self.pivots = list(pivots)
        self._pivpos = {p: k for k, p in enumerate(self.pivots)}

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Mapping]) -> "Subspace":
        z = field.zero
        rows = []
        for v in vectors:
            if v:
                row = [z] * ambient
                for i, c in v.items():
                    row[i] = c
                rows.append(row)
        if not rows:
            return cls(field, ambient, [], [])
        red, piv = rref_rows(field, rows, ambient)
        basis = [{i: c for i, c in enumerate(red[k]) if c} for k in range(len(piv))]
        return cls(field, ambient, basis, piv)

    @classmethod
    def image(cls, M: LinearMap) -> "Subspace":
        return cls.span(M.field, M.out_dim, M.cols)

    @classmethod
    def whole(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [{i: field.one} for i in range(ambient)], range(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def embed(self, coords: Mapping) -> dict:
        out: dict = {}
        for k, a in coords.items():
            for i, c in self.basis[k].items():
                add_into(out, i, a * c)
        return out

    def coords(self, v: Mapping) -> dict:
        """Coordinates of v in this basis; raises NotInSubspace when v is outside."""
        c = {k: v[p] for k, p in enumerate(self.pivots) if v.get(p)}
        if self.embed(c) != {i: x for i, x in v.items() if x}:
            raise NotInSubspace("vector is not in the subspace")
        return c

    def contains(self, v: Mapping) -> bool:
        try:
            self.coords(v)
            return True
        except NotInSubspace:
            return False

    def coords2(self, T: Mapping, n: int | None = None) -> dict:
        """Coordinates in W⊗W of a tensor {flat ambient index pair: scalar}, given flat with stride n."""
        n = self.ambient if n is None else n
        pp = self._pivpos
        got: dict = {}
        for ij, x in T.items():
            i, j = divmod(ij, n)
            if i in pp and j in pp:
                got[(pp[i], pp[j])] = x
        recon: dict = {}
        for (k, l), a in got.items():
            for i, c in self.basis[k].items():
                for j, d in self.basis[l].items():
                    add_into(recon, i * n + j, a * c * d)
        if recon != {k: x for k, x in T.items() if x}:
            raise NotInSubspace("tensor is not in W⊗W")
        return got

    def embedding(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.ambient,), self.basis)

    def section(self) -> LinearMap:
        """Pivot read-off ambient -> coordinates (a left inverse of the embedding)."""
        cols = [({self._pivpos[i]: self.field.one} if i in self._pivpos else {}) for i in range(self.ambient)]
        return LinearMap(self.field, (self.ambient,), (self.dim,), cols)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, tuple(self.pivots)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.ambient})"
