"""Stable names for zoo objects, shared by the command line and the acceptance suite."""
from __future__ import annotations

from typing import Callable

from ..exactmath import QQ, Field, QQi
from ..hopfcore import HopfData, coopposite
from .groups import group_by_name
from .hopf import a4prime, a22, dual_group_algebra, group_algebra, h4_tensor_a22, h4_tensor_h4, h16, sweedler_h4
from .pairs import pair_subgroup_indicator, pair_normal_average, pair_a4prime, pair_a22, pair_adjoint, pair_h4_negative, pair_kGkG

_FIXED: dict[str, Callable[[Field], HopfData]] = {
    "h4": sweedler_h4,
    "h4cop": lambda F: coopposite(sweedler_h4(F)),
    "a22": a22,
    "a4prime": a4prime,
    "h16": h16,
    "h4xh4": h4_tensor_h4,
    "h4xa22": h4_tensor_a22,
}

HOPF_NAMES = tuple(_FIXED) + ("k<G>", "k<G>*")
PAIR_NAMES = ("pair_subgroup_indicator", "pair_normal_average", "pair_adjoint", "pair_kGkG", "pair_a22", "pair_a4prime", "pair_h4_negative")


def build_hopf(name: str, F: Field = QQ) -> HopfData:
    """``h4``, ``a22``, ... or ``k<G>`` / ``k<G>*`` with G one of Cn, Dn, S3, S4, C2xC2."""
    key = name.strip()
    if key.lower() in _FIXED:
        return _FIXED[key.lower()](F)
    if key.startswith("k") and len(key) > 1:
        dual = key.endswith("*")
        G = group_by_name(key[1:-1] if dual else key[1:])
        return dual_group_algebra(G, F) if dual else group_algebra(G, F)
    raise KeyError(f"unknown Hopf algebra {name!r}; known: {', '.join(HOPF_NAMES)}")


def build_pair(name: str, F: Field | None = None, **params):
    """Build a named pair; ``F=None`` keeps the pair's own default field."""
    params = {k: v for k, v in params.items() if v is not None}
    if F is not None:
        params["F"] = F
    builders = {
        "pair_subgroup_indicator": pair_subgroup_indicator, "pair_normal_average": pair_normal_average, "pair_adjoint": pair_adjoint, "pair_kGkG": pair_kGkG,
        "pair_a22": pair_a22, "pair_a4prime": pair_a4prime, "pair_h4_negative": pair_h4_negative,
    }
    if name not in builders:
        raise KeyError(f"unknown pair {name!r}; known: {', '.join(PAIR_NAMES)}")
    return builders[name](**params)


def acceptance_hopf_zoo() -> list[tuple[str, HopfData]]:
    """Every Hopf algebra the axiom-suite criterion names."""
    out = []
    for g in ["C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "D4"]:
        out.append((f"k{g}", build_hopf(f"k{g}")))
        out.append((f"k{g}*", build_hopf(f"k{g}*")))
    for n in ("h4", "a22", "a4prime", "h4xh4", "h4xa22"):
        out.append((n, build_hopf(n)))
    out.append(("h16", h16(QQi())))
    return out


def positive_pairs(F: Field = QQ) -> list:
    """The positive pairs of the examples, in a fixed order."""
    ps = [
        pair_subgroup_indicator("C2", "e", "C2", "C2", F=F),
        pair_normal_average("C4", "e,c2", F=F),
        pair_normal_average("S3", "e,(123),(132)", F=F),
        pair_adjoint("S3", F=F),
        pair_kGkG("S3", F=F),
        pair_a22(F=F),
    ]
    if F is QQ:
        ps.append(pair_a4prime())
    return ps
