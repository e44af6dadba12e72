"""Exact base fields: the rationals, simple extensions of Q, and prime fields.

Rationals are plain ``gmpy2.mpq`` values.  Extension and prime-field
elements are small wrapper classes that know their field.  Every field
object coerces the usual inputs (ints, fractions, ``"p/q"`` strings,
coefficient lists) through ``F(value)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq, mpz


class FieldMismatch(ValueError):
    """Raised when scalars from different fields meet."""


def _to_mpq(x) -> mpq:
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, (int, type(mpz(0)))):
        return mpq(x)
    if isinstance(x, type(mpq(0))):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        return mpq(s)
    if isinstance(x, (Ext, Mod)):
        raise FieldMismatch(f"cannot read {x!r} as a rational")
    raise TypeError(f"cannot read {type(x).__name__} as a rational")


class Field:
    """Common interface.  Subclasses fill in ``kind`` and ``characteristic``."""

    kind: str = ""
    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def header(self) -> dict:
        raise NotImplementedError

    def encode(self, x):
        raise NotImplementedError

    def decode(self, v):
        raise NotImplementedError

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return self.one / x

    def roots(self, coeffs: Sequence) -> list:
        """Distinct roots in this field of sum(coeffs[k] X^k)."""
        from .characters import field_roots

        return field_roots(self, [self(c) for c in coeffs])

    def primitive_root_of_unity(self, n: int):
        """A primitive n-th root of unity in the field, or None.

        Prefers the generator of an extension when it qualifies, so that
        Q[t]/(t^2+1) yields t = i.
        """
        if n == 1:
            return self.one
        cands = self.roots([-1] + [0] * (n - 1) + [1])
        prim = [r for r in cands if all(r ** k != self.one for k in range(1, n))]
        if not prim:
            return None
        gen = getattr(self, "gen", None)
        if gen is not None and gen in prim:
            return gen
        return sorted(prim, key=self.sort_key)[0]

    def sort_key(self, x):
        return repr(self.encode(x))

    def random_element(self, rng, bound: int = 3):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class RationalField(Field):
    kind = "Q"
    characteristic = 0
    name = "Q"

    def __call__(self, x) -> mpq:
        return _to_mpq(x)

    def contains(self, x) -> bool:
        return isinstance(x, type(mpq(0)))

    def header(self) -> dict:
        return {"kind": "Q"}

    def encode(self, x) -> str:
        x = mpq(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def decode(self, v) -> mpq:
        if isinstance(v, float):
            raise ValueError("floats are not exact scalars")
        return _to_mpq(v)

    def sort_key(self, x):
        return (0, mpq(x))

    def random_element(self, rng, bound: int = 3):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return mpq(num, den)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")


QQ = RationalField()


class Mod:
    """Residue modulo the prime of its field, kept in [0, p)."""

    __slots__ = ("v", "F")

    def __init__(self, v: int, F: "PrimeField"):
        self.v = int(v) % F.p
        self.F = F

    def _other(self, o) -> int | None:
        if isinstance(o, Mod):
            if o.F.p != self.F.p:
                raise FieldMismatch(f"GF({self.F.p}) vs GF({o.F.p})")
            return o.v
        if isinstance(o, (int, type(mpz(0)))) and not isinstance(o, bool):
            return int(o)
        if isinstance(o, type(mpq(0))):
            return self.F(o).v
        if isinstance(o, Ext):
            raise FieldMismatch("prime field vs extension field")
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Mod(self.v + w, self.F)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Mod(self.v - w, self.F)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Mod(w - self.v, self.F)

    def __mul__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Mod(self.v * w, self.F)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.F)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.F.p)
        return Mod(pow(self.v, -1, self.F.p), self.F)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * Mod(w, self.F).inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Mod(w, self.F) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.v, n, self.F.p), self.F)

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, o) -> bool:
        try:
            w = self._other(o)
        except FieldMismatch:
            return False
        if w is None:
            return NotImplemented
        return (self.v - w) % self.F.p == 0

    def __hash__(self) -> int:
        return hash((self.v, self.F.p))

    def __repr__(self) -> str:
        return f"{self.v} mod {self.F.p}"

    def __str__(self) -> str:
        return str(self.v)


class PrimeField(Field):
    kind = "GF"

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= 2 ** 61 or not gmpy2.is_prime(p, 50):
            raise ValueError(f"GF(p) needs a prime 2 <= p < 2^61, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.F.p != self.p:
                raise FieldMismatch(f"GF({x.F.p}) element given to GF({self.p})")
            return x
        if isinstance(x, Ext):
            raise FieldMismatch("extension element given to a prime field")
        if isinstance(x, str) and "/" not in x:
            return Mod(int(x.strip()), self)
        if isinstance(x, (int, type(mpz(0)))) and not isinstance(x, bool):
            return Mod(int(x), self)
        q = _to_mpq(x)
        den = int(q.denominator) % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes in GF({self.p})")
        return Mod(int(q.numerator) * pow(den, -1, self.p), self)

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.F.p == self.p

    def header(self) -> dict:
        return {"kind": "GF", "p": self.p}

    def encode(self, x) -> int:
        return self(x).v

    def decode(self, v) -> Mod:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"prime-field scalars are integers, got {v!r}")
        return Mod(v, self)

    def sort_key(self, x):
        return (0, self(x).v)

    def random_element(self, rng, bound: int = 3):
        return Mod(rng.randrange(self.p), self)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


class Ext:
    """Element of Q[t]/(f), stored as its length-d coefficient tuple (low degree first)."""

    __slots__ = ("c", "F")

    def __init__(self, c: tuple, F: "ExtensionField"):
        self.c = c
        self.F = F

    def _other(self, o):
        if isinstance(o, Ext):
            if o.F is not self.F and o.F.modulus != self.F.modulus:
                raise FieldMismatch(f"{self.F.name} vs {o.F.name}")
            return o
        if isinstance(o, Mod):
            raise FieldMismatch("extension field vs prime field")
        if isinstance(o, (int, type(mpz(0)), type(mpq(0)), Fraction)) and not isinstance(o, bool):
            return self.F(o)
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Ext(tuple(a + b for a, b in zip(self.c, w.c)), self.F)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Ext(tuple(a - b for a, b in zip(self.c, w.c)), self.F)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return w - self

    def __mul__(self, o):
        if isinstance(o, (int, type(mpq(0)))) and not isinstance(o, bool):
            return Ext(tuple(a * o for a in self.c), self.F)
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self.F._mul(self.c, w.c)

    __rmul__ = __mul__

    def __neg__(self):
        return Ext(tuple(-a for a in self.c), self.F)

    def __pos__(self):
        return self

    def inverse(self) -> "Ext":
        return self.F._inverse(self)

    def __truediv__(self, o):
        if isinstance(o, (int, type(mpq(0)))) and not isinstance(o, bool):
            if not o:
                raise ZeroDivisionError("division by zero")
            inv = 1 / mpq(o)
            return Ext(tuple(a * inv for a in self.c), self.F)
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * w.inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return w * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.F.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, o) -> bool:
        try:
            w = self._other(o)
        except FieldMismatch:
            return False
        if w is None:
            return NotImplemented
        return self.c == w.c

    def __hash__(self) -> int:
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __repr__(self) -> str:
        return f"Ext({self.F.format(self)})"

    def __str__(self) -> str:
        return self.F.format(self)


class ExtensionField(Field):
    """Q[t]/(f) for a monic irreducible f of degree 1..4.

    ``modulus`` lists the coefficients of f from the constant term up,
    ending with the leading 1.
    """

    kind = "ext"
    characteristic = 0

    def __init__(self, modulus: Sequence, var: str = "t"):
        mod = tuple(_to_mpq(c) for c in modulus)
        while len(mod) > 1 and mod[-1] == 0:
            mod = mod[:-1]
        d = len(mod) - 1
        if not 1 <= d <= 4:
            raise ValueError(f"defining polynomial must have degree 1..4, got {d}")
        if mod[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        if not _irreducible_over_q(mod):
            raise ValueError(f"defining polynomial {_poly_str(mod, var)} is reducible over Q")
        self.modulus = mod
        self.degree = d
        self.var = var
        self.name = f"Q[{var}]/({_poly_str(mod, var)})"
        # t^k reduced, for k = d .. 2d-2
        red = []
        cur = [-c for c in mod[:-1]]
        for _ in range(d - 1):
            red.append(tuple(cur))
            lead = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            cur = [a - lead * m for a, m in zip(cur, mod[:-1])]
        red.append(tuple(cur))
        self._reduce = red
        self._zero = tuple(mpq(0) for _ in range(d))
        self.gen = self.from_coeffs([0, 1]) if d > 1 else self.from_coeffs([-mod[0]])

    def from_coeffs(self, coeffs: Iterable) -> Ext:
        cs = [_to_mpq(c) for c in coeffs]
        if len(cs) > self.degree:
            # a longer polynomial in the generator: evaluate by Horner
            result = self(0)
            for c in reversed(cs):
                result = result * self.gen + c
            return result
        cs = cs + [mpq(0)] * (self.degree - len(cs))
        return Ext(tuple(cs), self)

    def __call__(self, x) -> Ext:
        if isinstance(x, Ext):
            if x.F.modulus != self.modulus:
                raise FieldMismatch(f"{x.F.name} element given to {self.name}")
            return x
        if isinstance(x, (list, tuple)):
            return self.from_coeffs(x)
        q = _to_mpq(x)
        return Ext((q,) + self._zero[1:], self)

    def _mul(self, a: tuple, b: tuple) -> Ext:
        d = self.degree
        if d == 1:
            return Ext((a[0] * b[0],), self)
        prod = [mpq(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                r = self._reduce[k - d]
                out = [o + c * rr for o, rr in zip(out, r)]
        return Ext(tuple(out), self)

    def _inverse(self, x: Ext) -> Ext:
        if not x:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        # solve the linear system (mult-by-x) y = 1
        d = self.degree
        cols = []
        for k in range(d):
            cols.append((x * (self.gen ** k)).c)
        rows = [[cols[j][i] for j in range(d)] + [mpq(1) if i == 0 else mpq(0)] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if rows[r][c])
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = 1 / rows[c][c]
            rows[c] = [v * inv for v in rows[c]]
            for r in range(d):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return Ext(tuple(rows[i][d] for i in range(d)), self)

    def contains(self, x) -> bool:
        return isinstance(x, Ext) and x.F.modulus == self.modulus

    def header(self) -> dict:
        return {"kind": "ext", "var": self.var, "modulus": [QQ.encode(c) for c in self.modulus]}

    def encode(self, x) -> list:
        return [QQ.encode(c) for c in self(x).c]

    def decode(self, v) -> Ext:
        if isinstance(v, list):
            if len(v) != self.degree:
                raise ValueError(f"extension scalar needs {self.degree} coefficients, got {len(v)}")
            return Ext(tuple(QQ.decode(c) for c in v), self)
        return self(QQ.decode(v))

    def format(self, x: Ext) -> str:
        terms = []
        for k, c in enumerate(x.c):
            if not c:
                continue
            cs = QQ.encode(c)
            if k == 0:
                terms.append(cs)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{cs}*{mono}")
        return "+".join(terms).replace("+-", "-") if terms else "0"

    def sort_key(self, x):
        return (0, tuple(self(x).c))

    def random_element(self, rng, bound: int = 3):
        return Ext(tuple(QQ.random_element(rng, bound) for _ in range(self.degree)), self)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtensionField) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("ext", self.modulus))


def _poly_str(coeffs: Sequence, var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        cs = QQ.encode(c)
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append("-" + mono)
        elif mono:
            terms.append(f"{cs}*{mono}")
        else:
            terms.append(cs)
    return "+".join(terms).replace("+-", "-")


def _irreducible_over_q(mod: tuple) -> bool:
    import sympy

    X = sympy.Symbol("X")
    poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(mod)], X, domain="QQ")
    return poly.is_irreducible


def QQi() -> ExtensionField:
    """Q(i) presented as Q[t]/(t^2+1)."""
    return ExtensionField([1, 0, 1], var="i")


def field_from_header(h: dict) -> Field:
    """Rebuild a field from its JSON header."""
    if not isinstance(h, dict) or "kind" not in h:
        raise ValueError("field header must be an object with a 'kind'")
    kind = h["kind"]
    if kind == "Q":
        return QQ
    if kind == "GF":
        return PrimeField(h["p"])
    if kind == "ext":
        return ExtensionField([QQ.decode(c) for c in h["modulus"]], var=h.get("var", "t"))
    raise ValueError(f"unknown field kind {kind!r}")


def parse_field(text: str) -> Field:
    """Read a field name as typed on the command line.

    Accepted: ``Q``, ``Q(i)``, ``GF(p)`` / ``GFp``, and
    ``Q[t]/(c0,c1,...,1)`` with coefficients listed from the constant term.
    """
    s = text.strip().replace(" ", "")
    if s in ("Q", "QQ"):
        return QQ
    if s in ("Q(i)", "Qi", "QQ(i)"):
        return QQi()
    up = s.upper()
    if up.startswith("GF"):
        inner = s[2:].strip("()")
        return PrimeField(int(inner))
    if s.startswith("Q[") and "]/(" in s:
        var = s[2 : s.index("]")]
        body = s[s.index("]/(") + 3 : -1]
        return ExtensionField([c for c in body.split(",")], var=var or "t")
    raise ValueError(f"unrecognised field {text!r}")


def common_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first.name} vs {f.name}")
    return first
