"""Structure-constant containers for algebras, coalgebras and Hopf algebras."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from functools import cached_property
from typing import Callable, Mapping, Sequence

from ..exactmath import Field, LinearMap, Matrix, add_into


Vector = dict  # sparse {basis index: nonzero scalar}


def dense_to_sparse(v: Sequence) -> Vector:
    return {i: x for i, x in enumerate(v) if x}


def sparse_to_dense(field: Field, v: Mapping, dim: int) -> list:
    z = field.zero
    return [v.get(i, z) for i in range(dim)]


def unit_map_of(field: Field, dim: int, unit: Mapping) -> LinearMap:
    return LinearMap(field, (), (dim,), [dict(unit)])


def counit_map_of(field: Field, dim: int, counit: Mapping) -> LinearMap:
    return LinearMap(field, (dim,), (), [({0: counit[i]} if counit.get(i) else {}) for i in range(dim)])


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Multiplication (dim,dim)->(dim,) and a unit vector."""

    field: Field
    dim: int
    mult: LinearMap
    unit: Vector
    labels: tuple
    unital: bool = True
    left_unital: bool = True

    def __post_init__(self):
        if self.mult.dom != (self.dim, self.dim) or self.mult.cod != (self.dim,):
            raise ValueError(f"multiplication must be ({self.dim},{self.dim})->({self.dim},), got {self.mult.dom}->{self.mult.cod}")
        if len(self.labels) != self.dim:
            raise ValueError("one label per basis element")
        if any(k < 0 or k >= self.dim for k in self.unit):
            raise ValueError("unit index out of range")

    @cached_property
    def unit_map(self) -> LinearMap:
        return unit_map_of(self.field, self.dim, self.unit)

    def product(self, u: Mapping, v: Mapping) -> Vector:
        out: Vector = {}
        n = self.dim
        cols = self.mult.cols
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in cols[i * n + j].items():
                    add_into(out, k, ab * c)
        return out

    def left_mult_matrix(self, u: Mapping) -> Matrix:
        cols = [self.product(u, {j: self.field.one}) for j in range(self.dim)]
        return LinearMap(self.field, (self.dim,), (self.dim,), cols).to_matrix()

    def is_commutative(self) -> bool:
        n = self.dim
        cols = self.mult.cols
        return all(cols[i * n + j] == cols[j * n + i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True, eq=False)
class CoalgebraData:
    """Comultiplication (dim,)->(dim,dim) and a counit vector."""

    field: Field
    dim: int
    comult: LinearMap
    counit: Vector
    labels: tuple
    counital: bool = True
    right_counital: bool = True

    def __post_init__(self):
        if self.comult.dom != (self.dim,) or self.comult.cod != (self.dim, self.dim):
            raise ValueError(f"comultiplication must be ({self.dim},)->({self.dim},{self.dim})")
        if len(self.labels) != self.dim:
            raise ValueError("one label per basis element")

    @cached_property
    def counit_map(self) -> LinearMap:
        return counit_map_of(self.field, self.dim, self.counit)

    def coproduct(self, u: Mapping) -> dict:
        """Δ(u) as {(j, k): scalar}."""
        out: dict = {}
        n = self.dim
        for i, a in u.items():
            for jk, c in self.comult.cols[i].items():
                add_into(out, divmod(jk, n), a * c)
        return out

    def counit_of(self, u: Mapping):
        s = self.field.zero
        for i, a in u.items():
            e = self.counit.get(i)
            if e:
                s = s + a * e
        return s

    def is_cocommutative(self) -> bool:
        n = self.dim
        for col in self.comult.cols:
            for jk, c in col.items():
                j, k = divmod(jk, n)
                if col.get(k * n + j) != c:
                    return False
        return True


@dataclass(frozen=True, eq=False)
class HopfData:
    """A bialgebra with an optional antipode (dim,)->(dim,)."""

    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinearMap | None = None
    name: str = ""
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise ValueError("algebra and coalgebra dimensions differ")
        if self.algebra.field != self.coalgebra.field:
            raise ValueError("algebra and coalgebra fields differ")
        if tuple(self.algebra.labels) != tuple(self.coalgebra.labels):
            raise ValueError("algebra and coalgebra labels differ")
        if self.antipode is not None and (self.antipode.dom != (self.dim,) or self.antipode.cod != (self.dim,)):
            raise ValueError("antipode must be (dim,)->(dim,)")

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    labels = property(lambda self: self.algebra.labels)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    unit_map = property(lambda self: self.algebra.unit_map)
    counit_map = property(lambda self: self.coalgebra.counit_map)
    S = property(lambda self: self.antipode)

    def product(self, u: Mapping, v: Mapping) -> Vector:
        return self.algebra.product(u, v)

    def coproduct(self, u: Mapping) -> dict:
        return self.coalgebra.coproduct(u)

    def counit_of(self, u: Mapping):
        return self.coalgebra.counit_of(u)

    def antipode_of(self, u: Mapping) -> Vector:
        if self.antipode is None:
            raise ValueError(f"{self.name or 'this bialgebra'} carries no antipode")
        return self.antipode.apply(u)

    def basis(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element {label!r} in {self.name}; labels are {list(self.labels)}") from None

    def vec(self, terms: Mapping[str, object] | str) -> Vector:
        """Sparse vector from {label: coefficient} (or a single label)."""
        if isinstance(terms, str):
            terms = {terms: 1}
        out: Vector = {}
        for lab, c in terms.items():
            add_into(out, self.basis(lab), self.field(c))
        return out

    def with_antipode(self, S: LinearMap | None) -> "HopfData":
        return replace(self, antipode=S)

    def renamed(self, name: str) -> "HopfData":
        return replace(self, name=name)

    def format_vector(self, v: Mapping) -> str:
        return format_vector(self.field, v, self.labels)


def format_vector(field: Field, v: Mapping, labels: Sequence[str]) -> str:
    if not v:
        return "0"
    parts = []
    for i in sorted(v):
        c = v[i]
        cs = _scalar_str(field, c)
        lab = labels[i]
        if cs == "1":
            parts.append(lab)
        elif cs == "-1":
            parts.append("-" + lab)
        else:
            parts.append(f"({cs})*{lab}" if any(ch in cs[1:] for ch in "+-") else f"{cs}*{lab}")
    return " + ".join(parts).replace("+ -", "- ")


def _scalar_str(field: Field, c) -> str:
    enc = field.encode(c)
    if isinstance(enc, list):
        return str(c)
    return str(enc)


def make_algebra(field: Field, labels: Sequence[str], mult_fn: Callable[[int, int], Mapping], unit: Mapping,
                 unital: bool = True, left_unital: bool = True) -> AlgebraData:
    n = len(labels)
    cols = []
    for i in range(n):
        for j in range(n):
            col: dict = {}
            for k, c in mult_fn(i, j).items():
                add_into(col, k, field(c))
            cols.append(col)
    m = LinearMap(field, (n, n), (n,), cols)
    return AlgebraData(field, n, m, {k: field(c) for k, c in unit.items() if c}, tuple(labels), unital, left_unital)


def make_coalgebra(field: Field, labels: Sequence[str], comult_fn: Callable[[int], Mapping], counit: Mapping,
                   counital: bool = True, right_counital: bool = True) -> CoalgebraData:
    n = len(labels)
    cols = []
    for i in range(n):
        col: dict = {}
        for (j, k), c in comult_fn(i).items():
            add_into(col, j * n + k, field(c))
        cols.append(col)
    D = LinearMap(field, (n,), (n, n), cols)
    return CoalgebraData(field, n, D, {k: field(c) for k, c in counit.items() if c}, tuple(labels), counital, right_counital)


def make_hopf(field: Field, labels: Sequence[str], mult_fn, unit, comult_fn, counit, antipode_fn=None,
              name: str = "", meta: dict | None = None) -> HopfData:
    A = make_algebra(field, labels, mult_fn, unit)
    C = make_coalgebra(field, labels, comult_fn, counit)
    S = None
    if antipode_fn is not None:
        n = len(labels)
        cols = []
        for i in range(n):
            col: dict = {}
            for k, c in antipode_fn(i).items():
                add_into(col, k, field(c))
            cols.append(col)
        S = LinearMap(field, (n,), (n,), cols)
    return HopfData(A, C, S, name, dict(meta or {}))


def relabel(B: HopfData, labels: Sequence[str], name: str | None = None) -> HopfData:
    labels = tuple(labels)
    return HopfData(
        replace(B.algebra, labels=labels),
        replace(B.coalgebra, labels=labels),
        B.antipode,
        B.name if name is None else name,
        dict(B.meta),
    )
