"""Sparse linear maps between tensor powers, and a named-leg tensor used to
evaluate Sweedler-style expressions.

Index convention (shared by everything): a basis tuple (i_1, ..., i_r) of
V_1 (x) ... (x) V_r flattens to i_1*d_2*...*d_r + ... + i_r, i.e. the
LEFT factor is the major index, matching :func:`.matrix.kron`.
"""
from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .fields import Field, FieldMismatch
from .matrix import Matrix


def flat_index(idx: Sequence[int], shape: Sequence[int]) -> int:
    k = 0
    for i, d in zip(idx, shape):
        k = k * d + i
    return k


def unflat_index(k: int, shape: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(shape):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


def _size(shape: Sequence[int]) -> int:
    n = 1
    for d in shape:
        n *= d
    return n


def add_into(acc: dict, key, val) -> None:
    if not val:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = val
    else:
        s = cur + val
        if s:
            acc[key] = s
        else:
            del acc[key]


class LinearMap:
    """Linear map from V_dom = (x) dom to V_cod = (x) cod.

    ``cols[k]`` is the image of the k-th flattened domain basis vector as a
    dict {flattened codomain index: nonzero scalar}.
    """

    __slots__ = ("field", "dom", "cod", "cols", "_tuples")

    def __init__(self, field: Field, dom: Sequence[int], cod: Sequence[int], cols: Sequence[Mapping]):
        self.field = field
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        if len(cols) != _size(self.dom):
            raise ValueError(f"need {_size(self.dom)} columns, got {len(cols)}")
        self.cols = tuple({k: v for k, v in c.items() if v} for c in cols)
        self._tuples = None

    @property
    def in_dim(self) -> int:
        return _size(self.dom)

    @property
    def out_dim(self) -> int:
        return _size(self.cod)

    def cod_tuples(self) -> list[tuple[int, ...]]:
        if self._tuples is None:
            self._tuples = [unflat_index(k, self.cod) for k in range(self.out_dim)]
        return self._tuples

    # constructors -------------------------------------------------------
    @classmethod
    def from_function(cls, field: Field, dom, cod, fn: Callable[[tuple], Mapping]) -> "LinearMap":
        """Build from fn(domain basis tuple) -> {codomain tuple or flat index: scalar}."""
        dom, cod = tuple(dom), tuple(cod)
        cols = []
        for idx in product(*(range(d) for d in dom)):
            img = fn(idx)
            col: dict = {}
            for key, v in img.items():
                k = key if isinstance(key, int) else flat_index(key, cod)
                add_into(col, k, field(v) if not field.contains(v) else v)
            cols.append(col)
        return cls(field, dom, cod, cols)

    @classmethod
    def from_matrix(cls, M: Matrix, dom=None, cod=None) -> "LinearMap":
        dom = tuple(dom) if dom is not None else (M.cols,)
        cod = tuple(cod) if cod is not None else (M.rows,)
        if _size(dom) != M.cols or _size(cod) != M.rows:
            raise ValueError("shape does not match matrix size")
        cols = [{i: M.data[i][j] for i in range(M.rows) if M.data[i][j]} for j in range(M.cols)]
        return cls(M.field, dom, cod, cols)

    @classmethod
    def identity(cls, field: Field, shape) -> "LinearMap":
        shape = tuple(shape) if not isinstance(shape, int) else (shape,)
        one = field.one
        return cls(field, shape, shape, [{k: one} for k in range(_size(shape))])

    @classmethod
    def zero(cls, field: Field, dom, cod) -> "LinearMap":
        return cls(field, dom, cod, [{} for _ in range(_size(tuple(dom)))])

    @classmethod
    def permutation(cls, field: Field, shape: Sequence[int], perm: Sequence[int]) -> "LinearMap":
        """Reorders tensor factors: output factor k is input factor perm[k]."""
        shape = tuple(shape)
        cod = tuple(shape[p] for p in perm)
        one = field.one
        cols = []
        for idx in product(*(range(d) for d in shape)):
            out = tuple(idx[p] for p in perm)
            cols.append({flat_index(out, cod): one})
        return cls(field, shape, cod, cols)

    # algebra --------------------------------------------------------------
    def to_matrix(self) -> Matrix:
        F = self.field
        z = F.zero
        data = [[z] * self.in_dim for _ in range(self.out_dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                data[i][j] = v
        return Matrix(F, self.out_dim, self.in_dim, data)

    def reshape(self, dom=None, cod=None) -> "LinearMap":
        dom = self.dom if dom is None else tuple(dom)
        cod = self.cod if cod is None else tuple(cod)
        if _size(dom) != self.in_dim or _size(cod) != self.out_dim:
            raise ValueError("reshape must preserve sizes")
        return LinearMap(self.field, dom, cod, self.cols)

    def apply(self, v: Mapping[int, object]) -> dict:
        out: dict = {}
        for k, c in v.items():
            for i, x in self.cols[k].items():
                add_into(out, i, c * x)
        return out

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition self after other."""
        if self.field != other.field:
            raise FieldMismatch("composition across fields")
        if other.out_dim != self.in_dim:
            raise ValueError(f"cannot compose {self.dom}->{self.cod} after {other.dom}->{other.cod}")
        return LinearMap(self.field, other.dom, self.cod, [self.apply(c) for c in other.cols])

    def kron(self, other: "LinearMap") -> "LinearMap":
        if self.field != other.field:
            raise FieldMismatch("tensor product across fields")
        cols = []
        n2 = other.out_dim
        for a in self.cols:
            for b in other.cols:
                col = {}
                for i, x in a.items():
                    for j, y in b.items():
                        col[i * n2 + j] = x * y
                cols.append(col)
        return LinearMap(self.field, self.dom + other.dom, self.cod + other.cod, cols)

    def transpose(self) -> "LinearMap":
        cols: list[dict] = [{} for _ in range(self.out_dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return LinearMap(self.field, self.cod, self.dom, cols)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for k, v in b.items():
                add_into(col, k, v)
            cols.append(col)
        return LinearMap(self.field, self.dom, self.cod, cols)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-self.field.one)

    def scale(self, c) -> "LinearMap":
        c = self.field(c)
        if not c:
            return LinearMap.zero(self.field, self.dom, self.cod)
        return LinearMap(self.field, self.dom, self.cod, [{k: v * c for k, v in col.items()} for col in self.cols])

    def _same_shape(self, other: "LinearMap") -> None:
        if self.field != other.field:
            raise FieldMismatch("maps over different fields")
        if self.in_dim != other.in_dim or self.out_dim != other.out_dim:
            raise ValueError("maps of different shapes")

    def entry(self, out_idx, in_idx):
        i = out_idx if isinstance(out_idx, int) else flat_index(out_idx, self.cod)
        j = in_idx if isinstance(in_idx, int) else flat_index(in_idx, self.dom)
        return self.cols[j].get(i, self.field.zero)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.in_dim == other.in_dim
            and self.out_dim == other.out_dim
            and all(a == b for a, b in zip(self.cols, other.cols))
        )

    def __hash__(self):
        raise TypeError("LinearMap is not hashable")

    def first_difference(self, other: "LinearMap"):
        """(domain tuple, codomain tuple, self value, other value) of the first mismatch, or None."""
        self._same_shape(other)
        z = self.field.zero
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                for i in sorted(set(a) | set(b)):
                    x, y = a.get(i, z), b.get(i, z)
                    if x != y:
                        return unflat_index(j, self.dom), unflat_index(i, self.cod), x, y
        return None

    def __repr__(self) -> str:
        return f"LinearMap({self.dom}->{self.cod}, nnz={self.nnz()})"


class Tensor:
    """Sparse element of a tensor product whose legs carry names.

    ``apply(f, ins, outs)`` feeds the named legs ``ins`` (in that order)
    into the map f and names its outputs ``outs``; the new legs are placed
    where the first consumed leg was, unless ``at`` says otherwise.
    """

    __slots__ = ("field", "legs", "dims", "data")

    def __init__(self, field: Field, legs: Sequence[str], dims: Sequence[int], data: dict):
        self.field = field
        self.legs = tuple(legs)
        self.dims = tuple(dims)
        if len(set(self.legs)) != len(self.legs):
            raise ValueError(f"duplicate leg names {self.legs}")
        self.data = data

    @classmethod
    def basis(cls, field: Field, legs: Sequence[str], dims: Sequence[int], idx: Sequence[int]) -> "Tensor":
        return cls(field, legs, dims, {tuple(idx): field.one})

    @classmethod
    def vector(cls, field: Field, leg: str, dim: int, v: Mapping[int, object]) -> "Tensor":
        return cls(field, (leg,), (dim,), {(k,): x for k, x in v.items() if x})

    @classmethod
    def scalar(cls, field: Field, c=None) -> "Tensor":
        c = field.one if c is None else c
        return cls(field, (), (), {(): c} if c else {})

    def apply(self, f: LinearMap, ins: Sequence[str], outs: Sequence[str], at: int | None = None) -> "Tensor":
        ins, outs = tuple(ins), tuple(outs)
        if len(ins) != len(f.dom) or len(outs) != len(f.cod):
            raise ValueError(f"map {f.dom}->{f.cod} does not fit legs {ins}->{outs}")
        pos = []
        for name in ins:
            try:
                pos.append(self.legs.index(name))
            except ValueError:
                raise KeyError(f"no leg named {name!r} among {self.legs}") from None
        for p, d in zip(pos, f.dom):
            if self.dims[p] != d:
                raise ValueError(f"leg {self.legs[p]!r} has dim {self.dims[p]}, map expects {d}")
        posset = set(pos)
        keep = [i for i in range(len(self.legs)) if i not in posset]
        if at is None:
            at = sum(1 for i in keep if i < min(pos)) if pos else len(keep)
        legs = [self.legs[i] for i in keep]
        dims = [self.dims[i] for i in keep]
        legs[at:at] = outs
        dims[at:at] = f.cod
        strides = []
        s = 1
        for d in reversed(f.dom):
            strides.append(s)
            s *= d
        strides.reverse()
        tuples = f.cod_tuples()
        cols = f.cols
        res: dict = {}
        for key, c in self.data.items():
            k_in = 0
            for p, st in zip(pos, strides):
                k_in += key[p] * st
            col = cols[k_in]
            if not col:
                continue
            rest = tuple(key[i] for i in keep)
            pre, post = rest[:at], rest[at:]
            for o, v in col.items():
                nk = pre + tuples[o] + post
                val = c * v
                cur = res.get(nk)
                res[nk] = val if cur is None else cur + val
        res = {k: v for k, v in res.items() if v}
        return Tensor(self.field, legs, dims, res)

    def mul(self, m: LinearMap, a: str, b: str, out: str | None = None) -> "Tensor":
        """Shorthand: multiply legs a and b (in that order) with a product map."""
        return self.apply(m, (a, b), (out or a,))

    def order(self, names: Sequence[str]) -> "Tensor":
        names = tuple(names)
        if sorted(names) != sorted(self.legs):
            raise ValueError(f"cannot reorder {self.legs} as {names}")
        perm = [self.legs.index(n) for n in names]
        data = {tuple(k[p] for p in perm): v for k, v in self.data.items()}
        return Tensor(self.field, names, [self.dims[p] for p in perm], data)

    def rename(self, mapping: Mapping[str, str]) -> "Tensor":
        return Tensor(self.field, [mapping.get(n, n) for n in self.legs], self.dims, self.data)

    def tensor(self, other: "Tensor") -> "Tensor":
        data = {}
        for k1, v1 in self.data.items():
            for k2, v2 in other.data.items():
                data[k1 + k2] = v1 * v2
        return Tensor(self.field, self.legs + other.legs, self.dims + other.dims, {k: v for k, v in data.items() if v})

    def __add__(self, other: "Tensor") -> "Tensor":
        o = other.order(self.legs)
        data = dict(self.data)
        for k, v in o.data.items():
            add_into(data, k, v)
        return Tensor(self.field, self.legs, self.dims, data)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-self.field.one)

    def scale(self, c) -> "Tensor":
        if not c:
            return Tensor(self.field, self.legs, self.dims, {})
        return Tensor(self.field, self.legs, self.dims, {k: v * c for k, v in self.data.items()})

    def same(self, other: "Tensor") -> bool:
        return self.legs == other.legs and self.data == other.data

    def flat(self) -> dict:
        return {flat_index(k, self.dims): v for k, v in self.data.items()}

    def is_zero(self) -> bool:
        return not self.data

    def __repr__(self) -> str:
        return f"Tensor({self.legs}, nnz={len(self.data)})"


def compare_maps(
    lhs: Callable[[Tensor], Tensor],
    rhs: Callable[[Tensor], Tensor],
    field: Field,
    inputs: Sequence[tuple[str, int]],
    out_legs: Sequence[str],
):
    """Evaluate two composed maps on every input basis tuple.

    All tuples sharing a value of the first input are pushed through
    together: the tensor carries passive copies of the input legs, so one
    call of ``lhs``/``rhs`` evaluates the whole batch.  Returns None when
    the maps agree, otherwise (input tuple, lhs value, rhs value) for the
    lexicographically first mismatch, the values being Tensors on
    ``out_legs``.
    """
    names = [n for n, _ in inputs]
    dims = [d for _, d in inputs]
    copies = ["<" + n for n in names]
    one = field.one
    out_legs = tuple(out_legs)
    if not names:
        t = Tensor.scalar(field)
        a, b = lhs(t).order(out_legs), rhs(t).order(out_legs)
        return None if a.data == b.data else ((), a, b)
    nin = len(names)
    for v in range(dims[0]):
        data = {}
        for rest in product(*(range(d) for d in dims[1:])):
            idx = (v,) + rest
            data[idx + idx] = one
        t = Tensor(field, copies + names, dims + dims, data)
        a = lhs(t).order(copies + list(out_legs))
        b = rhs(t).order(copies + list(out_legs))
        if a.data == b.data:
            continue
        bad = [k[:nin] for k in set(a.data) ^ set(b.data)]
        bad += [k[:nin] for k in a.data.keys() & b.data.keys() if a.data[k] != b.data[k]]
        idx = min(bad)
        odims = a.dims[nin:]

        def slice_at(T: Tensor) -> Tensor:
            return Tensor(field, out_legs, odims, {k[nin:]: x for k, x in T.data.items() if k[:nin] == idx})

        return idx, slice_at(a), slice_at(b)
    return None


def materialize(
    fn: Callable[[Tensor], Tensor],
    field: Field,
    inputs: Sequence[tuple[str, int]],
    out_legs: Sequence[str],
) -> LinearMap:
    """The LinearMap (input dims) -> (out leg dims) computed by a tensor expression."""
    names = [n for n, _ in inputs]
    dims = [d for _, d in inputs]
    copies = ["<" + n for n in names]
    one = field.one
    data = {}
    for idx in product(*(range(d) for d in dims)):
        data[idx + idx] = one
    t = Tensor(field, copies + names, dims + dims, data)
    r = fn(t)
    if sorted(r.legs) != sorted(copies + list(out_legs)):
        raise ValueError(f"expression produced legs {r.legs}, expected {tuple(out_legs)}")
    r = r.order(copies + list(out_legs))
    nin = len(names)
    odims = r.dims[nin:]
    cols: list[dict] = [{} for _ in range(_size(dims))]
    for key, v in r.data.items():
        cols[flat_index(key[:nin], dims)][flat_index(key[nin:], odims)] = v
    return LinearMap(field, dims, odims, cols)
