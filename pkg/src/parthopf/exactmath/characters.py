"""Roots of univariate polynomials over the supported fields, and joint
eigen-characters of commuting operators.

Polynomial factoring is delegated to sympy; everything else is exact
linear algebra from :mod:`.matrix`.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import sympy
from gmpy2 import mpq

from .fields import ExtensionField, Field, PrimeField, RationalField, Ext, Mod


@lru_cache(maxsize=None)
def _sympy_ext_domain(modulus: tuple):
    t = sympy.Symbol("t")
    poly = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * t ** k for k, c in enumerate(modulus))
    K = sympy.QQ.algebraic_field(sympy.CRootOf(poly, 0))
    expect = [mpq(c) for c in reversed(modulus)]
    got = [mpq(c) for c in K.mod.to_list()]
    if got != expect:
        raise RuntimeError(f"sympy chose a different presentation {got} for modulus {expect}")
    return K


def _trim(coeffs: list) -> list:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def field_roots(F: Field, coeffs: Sequence) -> list:
    """Distinct roots in F of sum(coeffs[k] X^k), sorted deterministically."""
    cs = _trim([F(c) for c in coeffs])
    if not cs:
        raise ValueError("the zero polynomial has every element as a root")
    if len(cs) == 1:
        return []
    X = sympy.Symbol("X")
    roots = []
    if isinstance(F, RationalField):
        poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(cs)], X, domain="QQ")
        for fac, _ in poly.factor_list()[1]:
            if fac.degree() == 1:
                a, b = fac.rep.to_list()
                roots.append(mpq(-b / a))
    elif isinstance(F, PrimeField):
        poly = sympy.Poly([int(c.v) for c in reversed(cs)], X, modulus=F.p)
        for fac, _ in poly.factor_list()[1]:
            if fac.degree() == 1:
                a, b = [int(v) for v in fac.all_coeffs()]
                roots.append(F(-b) / F(a))
    elif isinstance(F, ExtensionField):
        K = _sympy_ext_domain(F.modulus)
        elems = [K([mpq(v) for v in reversed(c.c)]) for c in reversed(cs)]
        poly = sympy.Poly(elems, X, domain=K)
        for fac, _ in poly.factor_list()[1]:
            if fac.degree() == 1:
                a, b = fac.rep.to_list()
                r = -(b / a)
                roots.append(F.from_coeffs(list(reversed(r.to_list()))))
    else:
        raise TypeError(f"unsupported field {F!r}")
    uniq = []
    for r in roots:
        if r not in uniq:
            uniq.append(r)
    for r in uniq:
        val = F.zero
        for c in reversed(cs):
            val = val * r + c
        assert not val, "root check failed"
    return sorted(uniq, key=F.sort_key)


def minpoly_factor_characters(mult_ops: Sequence, start=None) -> list:
    """Joint eigenvalue tuples (with eigenvalues in the base field) of commuting operators.

    ``mult_ops`` are square Matrices on one space.  ``start`` optionally
    gives a Matrix whose columns span an invariant subspace to search in;
    the operators need only commute there.  Returns a list of tuples, one
    entry per operator, in a deterministic order.
    """
    from .matrix import Matrix, identity, restrict_operator

    ops = list(mult_ops)
    if not ops:
        return []
    F = ops[0].field
    n = ops[0].rows
    for M in ops:
        if M.rows != n or M.cols != n:
            raise ValueError("operators must be square of one size")
        if M.field != F:
            raise ValueError("operators over different fields")
    W0 = start if start is not None else identity(F, n)
    if W0.cols == 0:
        return []
    restricted = [restrict_operator(M, W0) for M in ops]
    k = W0.cols
    for a in range(len(restricted)):
        for b in range(a + 1, len(restricted)):
            A, B = restricted[a], restricted[b]
            if A @ B != B @ A:
                raise ValueError(f"operators {a} and {b} do not commute on the search space")
    # each entry: (eigenvalues so far, basis of joint eigenspace in W0-coordinates)
    pieces = [((), identity(F, k))]
    for C in restricted:
        nxt = []
        for vals, W in pieces:
            CW = restrict_operator(C, W)
            for r in eigenvalues_in_field(CW):
                shifted = CW - identity(F, CW.rows).scale(r)
                ker = shifted.kernel_matrix()
                if ker.cols:
                    nxt.append((vals + (r,), W @ ker))
        pieces = nxt
        if not pieces:
            return []
    return [vals for vals, _ in pieces]


def eigenvalues_in_field(C) -> list:
    """Distinct eigenvalues of the square Matrix C lying in its field."""
    from .matrix import krylov_minpoly

    F = C.field
    found = []
    for j in range(C.cols):
        e = [F.zero] * C.rows
        e[j] = F.one
        poly = krylov_minpoly(C, e)
        for r in field_roots(F, poly):
            if r not in found:
                found.append(r)
    return sorted(found, key=F.sort_key)
