"""Dense exact matrices and the elimination routines built on them.

Over Q, row reduction is fraction-free (integer rows, Bareiss-style
exact division); over other fields it is ordinary Gauss-Jordan.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq, mpz

from .fields import Field, FieldMismatch, RationalField


class Matrix:
    """rows x cols grid of scalars from a single field (row-major)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: list[list]):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        data = [[field(x) for x in r] for r in rows]
        ncols = len(data[0]) if data else (cols or 0)
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(field, len(data), ncols, data)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [[field(x) for x in c] for c in columns]
        nrows = len(cols[0]) if cols else (rows or 0)
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        data = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
        return cls(field, nrows, len(cols), data)

    # access -------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> list:
        return [r[j] for r in self.data]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.cols)]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [list(r) for r in self.data])

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    def transpose(self) -> "Matrix":
        return self.T

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        z = self.field.zero
        ocols = other.T.data if other.rows else [[] for _ in range(other.cols)]
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in ocols:
                s = z
                for k, a in nz:
                    b = c[k]
                    if b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(self.field, self.rows, other.cols, out)

    def apply(self, v: Sequence) -> list:
        z = self.field.zero
        out = []
        for r in self.data:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Matrix(self.field, self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        return Matrix(self.field, self.rows, self.cols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, [[a * c for a in r] for r in self.data])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s))
        )

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    def is_zero(self) -> bool:
        return not any(a for r in self.data for a in r)

    def trace(self):
        s = self.field.zero
        for i in range(min(self.rows, self.cols)):
            s = s + self.data[i][i]
        return s

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    # elimination --------------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        rows, piv = rref_rows(self.field, self.data, self.cols)
        return Matrix(self.field, len(rows), self.cols, rows), piv

    def rank(self) -> int:
        return len(rref_rows(self.field, self.data, self.cols)[1])

    def kernel(self) -> list[list]:
        return kernel_basis(self)

    def kernel_matrix(self) -> "Matrix":
        vecs = kernel_basis(self)
        if not vecs:
            return Matrix(self.field, self.cols, 0, [[] for _ in range(self.cols)])
        return Matrix.from_columns(self.field, vecs)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [self.field.one if i == j else self.field.zero for j in range(n)] for i, r in enumerate(self.data)]
        red, piv = rref_rows(self.field, aug, 2 * n)
        if piv[:n] != list(range(n)) or len([p for p in piv if p < n]) != n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, n, n, [r[n:] for r in red[:n]])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.data)
        return f"Matrix[{self.field.name}]({self.rows}x{self.cols}: {body})"


def identity(field: Field, n: int) -> Matrix:
    z, o = field.zero, field.one
    return Matrix(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])


def rref_rows(field: Field, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if isinstance(field, RationalField):
        return _rref_rational(rows, ncols)
    return _rref_generic(field, rows, ncols)


def _rref_generic(field: Field, rows: Sequence[Sequence], ncols: int):
    M = [list(r) for r in rows if any(r)]
    nrows = len(M)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = field.one / M[r][c]
        prow = [a * inv if a else a for a in M[r]]
        M[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f:
                    row = M[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rref_rational(rows: Sequence[Sequence], ncols: int):
    # scale each row to integers, then fraction-free Gauss-Jordan
    M = []
    for r in rows:
        if not any(r):
            continue
        den = mpz(1)
        for x in r:
            if x:
                d = mpq(x).denominator
                if d != 1:
                    den = den * d // _gcd(den, d)
        M.append([mpz(mpq(x) * den) for x in r])
    nrows = len(M)
    pivots: list[int] = []
    prev = mpz(1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        prow = M[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = M[i]
            a = row[c]
            if a:
                new = []
                for j in range(ncols):
                    q, rem = divmod(piv * row[j] - a * prow[j], prev)
                    if rem:
                        raise ArithmeticError("non-exact division in fraction-free elimination")
                    new.append(q)
                M[i] = new
            elif piv != prev:
                new = []
                for x in row:
                    q, rem = divmod(piv * x, prev)
                    if rem:
                        raise ArithmeticError("non-exact division in fraction-free elimination")
                    new.append(q)
                M[i] = new
        prev = piv
        pivots.append(c)
        r += 1
    out = []
    for k in range(r):
        d = M[k][pivots[k]]
        out.append([mpq(x, d) if x else mpq(0) for x in M[k]])
    return out, pivots


def _gcd(a, b):
    from gmpy2 import gcd

    return gcd(a, b)


def kernel_basis(A: Matrix) -> list[list]:
    """Basis of {x : A x = 0}; each vector is 1 at its own free column and 0 at the others."""
    red, piv = rref_rows(A.field, A.data, A.cols)
    F = A.field
    pivset = set(piv)
    free = [j for j in range(A.cols) if j not in pivset]
    out = []
    for f in free:
        v = [F.zero] * A.cols
        v[f] = F.one
        for row, p in zip(red, piv):
            c = row[f]
            if c:
                v[p] = -c
        out.append(v)
    return out


def solve_linear(A: Matrix, b: Matrix) -> Matrix | None:
    """Some x with A x = b, or None when the system is inconsistent."""
    if A.field != b.field:
        raise FieldMismatch(f"{A.field.name} vs {b.field.name}")
    if A.rows != b.rows or b.cols != 1:
        raise ValueError("solve_linear needs A.rows == b.rows and a single right-hand column")
    F = A.field
    aug = [list(r) + [b.data[i][0]] for i, r in enumerate(A.data)]
    red, piv = rref_rows(F, aug, A.cols + 1)
    if piv and piv[-1] == A.cols:
        return None
    x = [F.zero] * A.cols
    for row, p in zip(red, piv):
        x[p] = row[A.cols]
    return Matrix(F, A.cols, 1, [[v] for v in x])


def image_basis(A: Matrix) -> tuple[Matrix, Matrix]:
    """(basis, section) with basis @ section @ A == A.

    The basis columns are the nonzero rows of rref(A^T); the section reads
    off the pivot coordinates, so it is a 0/1 selection matrix.
    """
    F = A.field
    red, piv = rref_rows(F, A.T.data, A.rows)
    k = len(piv)
    basis = Matrix(F, A.rows, k, [[red[j][i] for j in range(k)] for i in range(A.rows)])
    sec = Matrix.zeros(F, k, A.rows)
    for i, p in enumerate(piv):
        sec.data[i][p] = F.one
    return basis, sec


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product with the left factor as the major index."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field.name} vs {B.field.name}")
    z = A.field.zero
    rows = []
    for i in range(A.rows):
        for k in range(B.rows):
            row = []
            for j in range(A.cols):
                a = A.data[i][j]
                if a:
                    row.extend(a * b for b in B.data[k])
                else:
                    row.extend([z] * B.cols)
            rows.append(row)
    return Matrix(A.field, A.rows * B.rows, A.cols * B.cols, rows)


def restrict_operator(M: Matrix, W: Matrix) -> Matrix:
    """Matrix of M on the M-invariant column space of W, in W's column coordinates."""
    MW = M @ W
    k = W.cols
    if k == 0:
        return Matrix(M.field, 0, 0, [])
    red, piv = rref_rows(M.field, W.T.data, W.rows)
    if len(piv) != k:
        raise ValueError("W must have independent columns")
    # rows piv of W form an invertible k x k block
    block = Matrix(M.field, k, k, [list(W.data[p]) for p in piv])
    target = Matrix(M.field, k, k, [list(MW.data[p]) for p in piv])
    C = block.inverse() @ target
    if W @ C != MW:
        raise ValueError("subspace is not invariant under the operator")
    return C


def krylov_minpoly(C: Matrix, v: Sequence) -> list:
    """Minimal polynomial of the vector v under C, low degree first, monic."""
    F = C.field
    tracker = DependencyTracker(F)
    w = list(v)
    while True:
        dep = tracker.add({i: x for i, x in enumerate(w) if x})
        if dep is not None:
            return [-c for c in dep] + [F.one]
        w = C.apply(w)


class DependencyTracker:
    """Feed sparse vectors in order; ``add`` returns the coefficients a_j of
    the first vector that equals sum_j a_j v_j over the earlier ones.

    Vectors are dicts {index: scalar}.  Independent vectors are stored and
    ``add`` returns None for them.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: list[tuple[int, dict, dict]] = []  # (pivot, reduced vector, expression)
        self.count = 0

    def add(self, v: dict):
        F = self.field
        red = {k: x for k, x in v.items() if x}
        expr: dict[int, object] = {}
        for piv, row, rexpr in self.rows:
            c = red.get(piv)
            if c:
                for k, x in row.items():
                    nv = red.get(k, F.zero) - c * x
                    if nv:
                        red[k] = nv
                    else:
                        red.pop(k, None)
                for k, x in rexpr.items():
                    nv = expr.get(k, F.zero) - c * x
                    if nv:
                        expr[k] = nv
                    else:
                        expr.pop(k, None)
        idx = self.count
        if not red:
            # 0 = v + expr  =>  v = -expr
            return [-expr.get(j, F.zero) for j in range(idx)]
        piv = min(red)
        inv = F.one / red[piv]
        row = {k: x * inv for k, x in red.items()}
        expr[idx] = F.one
        rexpr = {k: x * inv for k, x in expr.items()}
        self.rows.append((piv, row, rexpr))
        self.count += 1
        return None
