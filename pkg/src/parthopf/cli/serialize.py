"""JSON documents for Hopf data, pairs and reports.

Scalars go through the field codec ("p/q" strings over Q, integers over
GF(p), coefficient arrays over extensions).  Maps are lists of index/scalar
rows: [i, j, k, c] for multiplication, comultiplication, actions and
coactions; [i, c] for units and counits; [i, j, c] for antipodes.
"""
from __future__ import annotations

import json
from typing import Any

from ..exactmath import Field, LinearMap, field_from_header
from ..hopfcore import AlgebraData, CoalgebraData, HopfData
from ..matchedpair import PartialMatchedPair
from ..partial import PartialAction, PartialCoaction

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """A document is not valid for the schema."""


# encoding --------------------------------------------------------------------------

def _vec(F: Field, v: dict) -> list:
    return [[int(i), F.encode(c)] for i, c in sorted(v.items())]


def _rows(M: LinearMap) -> list:
    """Rows [input indices..., output indices..., c] in lexicographic order."""
    F = M.field
    out = []
    dom, cod = M.dom, M.cod
    for j, col in enumerate(M.cols):
        jin = _unflat(j, dom)
        for k, c in sorted(col.items()):
            out.append(list(jin) + list(_unflat(k, cod)) + [F.encode(c)])
    return out


def _unflat(k: int, shape) -> tuple:
    idx = []
    for s in reversed(shape):
        k, r = divmod(k, s)
        idx.append(r)
    return tuple(reversed(idx))


def hopf_doc(B: HopfData, provenance: dict | None = None) -> dict:
    F = B.field
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "hopf",
        "name": B.name,
        "field": F.header(),
        "dim": B.dim,
        "labels": list(B.labels),
        "mult": _rows(B.mult),
        "unit": _vec(F, B.unit),
        "comult": _rows(B.comult),
        "counit": _vec(F, B.counit),
        "antipode": _rows(B.antipode) if B.antipode is not None else None,
        "unital": B.algebra.unital,
        "counital": B.coalgebra.counital,
        "meta": _jsonable(B.meta, F),
    }
    if provenance is not None:
        doc["provenance"] = _jsonable(provenance, F)
    return doc


def _jsonable(x: Any, F: Field):
    if isinstance(x, dict):
        if x and all(isinstance(k, int) for k in x):
            return {"vector": _vec(F, x)}
        return {str(k): _jsonable(v, F) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, F) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    try:
        return F.encode(x)
    except Exception:
        return str(x)


def pair_doc(p: PartialMatchedPair) -> dict:
    F = p.field
    meta = {k: v for k, v in p.meta.items() if k not in ("lambda", "z")}
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "pair",
        "name": p.name,
        "field": F.header(),
        "H": hopf_doc(p.H),
        "L": hopf_doc(p.L),
        "action": _rows(p.act),
        "coaction": _rows(p.rho),
        "meta": _jsonable(meta, F),
    }
    if p.is_lambda_z:
        doc["lambda"] = _vec(F, p.meta["lambda"])
        doc["z"] = _vec(F, p.meta["z"])
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False, sort_keys=False)


# decoding --------------------------------------------------------------------------

def _need(doc: dict, key: str, typ, where: str):
    if key not in doc:
        raise SchemaError(f"{where}: missing field {key!r}")
    v = doc[key]
    if typ is not None and not isinstance(v, typ):
        raise SchemaError(f"{where}: field {key!r} must be {typ.__name__ if isinstance(typ, type) else typ}")
    return v


def _field(doc: dict, where: str) -> Field:
    try:
        return field_from_header(_need(doc, "field", dict, where))
    except (ValueError, KeyError, TypeError) as e:
        raise SchemaError(f"{where}: bad field header: {e}") from None


def _scalar(F: Field, v, where: str):
    try:
        return F.decode(v)
    except (ValueError, TypeError, ZeroDivisionError, KeyError) as e:
        raise SchemaError(f"{where}: bad scalar {v!r}: {e}") from None


def _read_vec(F: Field, rows, n: int, where: str) -> dict:
    if not isinstance(rows, list):
        raise SchemaError(f"{where}: expected a list of [index, scalar]")
    out: dict = {}
    for r in rows:
        if not (isinstance(r, list) and len(r) == 2 and isinstance(r[0], int) and 0 <= r[0] < n):
            raise SchemaError(f"{where}: bad entry {r!r}")
        c = _scalar(F, r[1], where)
        if c:
            out[r[0]] = out.get(r[0], F.zero) + c
    return {k: v for k, v in out.items() if v}


def _read_map(F: Field, rows, dom: tuple, cod: tuple, where: str) -> LinearMap:
    if not isinstance(rows, list):
        raise SchemaError(f"{where}: expected a list of index rows")
    shape = tuple(dom) + tuple(cod)
    cols = [dict() for _ in range(_size(dom))]
    for r in rows:
        if not (isinstance(r, list) and len(r) == len(shape) + 1):
            raise SchemaError(f"{where}: row {r!r} must have {len(shape) + 1} entries")
        idx = r[:-1]
        if not all(isinstance(i, int) and 0 <= i < s for i, s in zip(idx, shape)):
            raise SchemaError(f"{where}: index out of range in {r!r}")
        c = _scalar(F, r[-1], where)
        j = _flat(idx[: len(dom)], dom)
        k = _flat(idx[len(dom):], cod)
        v = cols[j].get(k, F.zero) + c
        if v:
            cols[j][k] = v
        else:
            cols[j].pop(k, None)
    return LinearMap(F, tuple(dom), tuple(cod), cols)


def _size(shape) -> int:
    n = 1
    for s in shape:
        n *= s
    return n


def _flat(idx, shape) -> int:
    k = 0
    for i, s in zip(idx, shape):
        k = k * s + i
    return k


def _meta_from(doc, F: Field, where: str):
    if isinstance(doc, dict):
        if set(doc) == {"vector"}:
            return {i: F.decode(c) for i, c in doc["vector"]}
        return {k: _meta_from(v, F, where) for k, v in doc.items()}
    if isinstance(doc, list):
        return [_meta_from(v, F, where) for v in doc]
    return doc


def _check_version(doc: dict, where: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: a document must be a JSON object")
    v = _need(doc, "schema_version", int, where)
    if v != SCHEMA_VERSION:
        raise SchemaError(f"{where}: unsupported schema_version {v}")


def hopf_from_doc(doc: dict, where: str = "hopf") -> HopfData:
    _check_version(doc, where)
    if doc.get("kind") != "hopf":
        raise SchemaError(f"{where}: kind must be 'hopf', got {doc.get('kind')!r}")
    F = _field(doc, where)
    n = _need(doc, "dim", int, where)
    if n < 1:
        raise SchemaError(f"{where}: dim must be positive")
    labels = _need(doc, "labels", list, where)
    if len(labels) != n or not all(isinstance(l, str) for l in labels):
        raise SchemaError(f"{where}: need {n} string labels")
    mult = _read_map(F, _need(doc, "mult", list, where), (n, n), (n,), where + ".mult")
    comult = _read_map(F, _need(doc, "comult", list, where), (n,), (n, n), where + ".comult")
    unit = _read_vec(F, _need(doc, "unit", list, where), n, where + ".unit")
    counit = _read_vec(F, _need(doc, "counit", list, where), n, where + ".counit")
    S = doc.get("antipode")
    S = _read_map(F, S, (n,), (n,), where + ".antipode") if S is not None else None
    unital = bool(doc.get("unital", True))
    counital = bool(doc.get("counital", True))
    try:
        A = AlgebraData(F, n, mult, unit, tuple(labels), unital, True)
        C = CoalgebraData(F, n, comult, counit, tuple(labels), counital, True)
        return HopfData(A, C, S, str(doc.get("name", "")), _meta_from(doc.get("meta", {}), F, where))
    except ValueError as e:
        raise SchemaError(f"{where}: {e}") from None


def pair_from_doc(doc: dict, where: str = "pair") -> PartialMatchedPair:
    _check_version(doc, where)
    if doc.get("kind") != "pair":
        raise SchemaError(f"{where}: kind must be 'pair', got {doc.get('kind')!r}")
    F = _field(doc, where)
    H = hopf_from_doc(_need(doc, "H", dict, where), where + ".H")
    L = hopf_from_doc(_need(doc, "L", dict, where), where + ".L")
    if H.field != F or L.field != F:
        raise SchemaError(f"{where}: field headers disagree")
    nH, nL = H.dim, L.dim
    act = _read_map(F, _need(doc, "action", list, where), (nH, nL), (nL,), where + ".action")
    rho = _read_map(F, _need(doc, "coaction", list, where), (nH,), (nH, nL), where + ".coaction")
    meta = _meta_from(doc.get("meta", {}), F, where)
    if not isinstance(meta, dict):
        raise SchemaError(f"{where}: meta must be an object")
    meta.setdefault("name", str(doc.get("name", "")))
    pa = PartialAction(H, L.algebra, act, "left")
    pc = PartialCoaction(L, H.coalgebra, rho, "right")
    if "lambda" in doc and "z" in doc:
        meta["lambda"] = _read_vec(F, doc["lambda"], nH, where + ".lambda")
        meta["z"] = _read_vec(F, doc["z"], nL, where + ".z")
    return PartialMatchedPair(H, L, pa, pc, meta=meta)


def load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from None
    _check_version(doc, path)
    if doc.get("kind") not in ("hopf", "pair"):
        raise SchemaError(f"{path}: kind must be 'hopf' or 'pair'")
    return doc
