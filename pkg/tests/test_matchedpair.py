import pytest

from parthopf.exactmath import QQ, LinearMap
from parthopf.matchedpair import (
    PartialMatchedPair,
    antipode_subidentities,
    check_antipode_conditions,
    check_derived_identities,
    check_lambda_z_pair,
    check_mirrored_pair,
    check_pmp,
    check_quasi_abelian,
    dual_pair,
    is_global_pair,
    is_quasi_abelian_pmp,
    lambda_z_pair,
)
from parthopf.report import CheckRefused
from parthopf.zoo import NEGATIVE_BLAME, cyclic, group_algebra, pair_subgroup_indicator, pair_normal_average, pair_h4_negative, symmetric

from conftest import pick


def test_positive_pairs_are_quasi_abelian_pmps(pairs):
    for name, p in pairs.items():
        assert is_quasi_abelian_pmp(p), name
        assert p.reports["pmp"].passed


def test_redundant_forms_of_the_compatibility_agree(pairs):
    for p in pairs.values():
        r = p.reports["pmp"].get("pmp compatibility, twist form agrees")
        assert r is not None and r.passed


def test_lambda_negative_witness():
    p = pair_h4_negative(beta=1, mode="lambda")
    rep = check_pmp(p)
    f = rep.first_failure()
    assert f.name == "pmp compatibility"
    assert f.witness["h"] == "xc" and f.witness["g"] == "1" and f.witness["x"] == "e"
    assert f.witness["lhs"] == "-c⊗e⊗e + xc⊗e⊗e"
    assert f.witness["rhs"] == "-1⊗e⊗e"


@pytest.mark.parametrize("mode", ["lambda", "z"])
@pytest.mark.parametrize("beta", [1, -2, QQ(1) / 3])
def test_negative_blames_the_right_predicate(mode, beta):
    p = pair_h4_negative(beta=beta, mode=mode)
    v = check_lambda_z_pair(p.H, p.L, p.meta["lambda"], p.meta["z"])
    assert not v.pmp_ok and v.agrees
    assert v.predicates[NEGATIVE_BLAME[mode]][0] is False
    assert p.meta["blame"] == NEGATIVE_BLAME[mode]


def test_z_mode_fails_even_at_beta_zero():
    p = pair_h4_negative(beta=0, mode="z")
    check_pmp(p)
    assert p.flags.get("pmp_ok") is False


def test_lambda_mode_fails_at_beta_zero():
    # λ = δ_1 here, which is not the counit since λ(c) = 0
    p = pair_h4_negative(beta=0, mode="lambda")
    v = check_lambda_z_pair(p.H, p.L, p.meta["lambda"], p.meta["z"])
    assert not v.pmp_ok and v.agrees
    assert v.predicates[NEGATIVE_BLAME["lambda"]][0] is False


def test_characterization_on_quasi_abelian_and_plain_pmps():
    G = symmetric(3)
    B = group_algebra(G)
    half = QQ(1) / 2
    # z supported on a non-normal subgroup: an idempotent that is not central
    v = check_lambda_z_pair(B, B, B.vec({"e": 1}), B.vec({"e": half, "(12)": half}))
    assert v.agrees
    assert v.lemma_prediction is False
    v = check_lambda_z_pair(B, B, B.vec({"e": 1, "(12)": 1}), B.vec({"e": 1}))
    assert v.agrees and v.lemma_prediction and v.quasi_abelian_ok


def test_trivial_pair_is_global():
    H = group_algebra(cyclic(3))
    L = group_algebra(cyclic(2))
    p = lambda_z_pair(H, L, dict(H.counit), dict(L.unit))
    assert check_pmp(p).passed
    rep = is_global_pair(p)
    assert rep.passed and p.flags.get("global_ok") is True
    assert rep.get("global: ρ multiplicative form").passed
    assert rep.get("global: Δ of action").passed


def test_partial_pairs_are_not_global():
    for p in (pair_subgroup_indicator(N2="e"), pair_normal_average()):
        rep = is_global_pair(p)
        assert p.flags.get("global_ok") is False
        assert "pair is not global" in rep.notes


def test_derived_identities_hold(pairs):
    for name in ("pair_subgroup_indicator", "pair_normal_average", "pair_a22"):
        rep = check_derived_identities(pick(pairs, name))
        assert rep.passed, rep.summary()


def test_antipode_conditions_hold_on_examples(pairs):
    for name, p in pairs.items():
        assert check_antipode_conditions(p).passed, name
        if p.is_lambda_z:
            assert antipode_subidentities(p).passed, name


def test_condition_one_fails_when_antipode_moves_z():
    p = pair_normal_average()
    L = p.L
    # a bogus antipode sending c2 to c so that S_L(z) != z
    cols = [dict(c) for c in L.antipode.cols]
    cols[L.basis("c2")] = {L.basis("c"): QQ.one}
    bad_L = L.with_antipode(LinearMap(QQ, (L.dim,), (L.dim,), cols))
    q = PartialMatchedPair(p.H, bad_L, p.action, p.coaction, meta=dict(p.meta))
    rep = check_antipode_conditions(q)
    assert rep.get("antipode condition on the unit action").passed is False
    assert rep.get("antipode condition on the coaction counit").passed is True
    assert antipode_subidentities(q).get("S_L(z) = z").passed is False


def test_dual_pair_of_examples_passes_mirrored_axioms(pairs):
    for name in ("pair_subgroup_indicator", "pair_normal_average", "pair_kGkG"):
        mp = dual_pair(pick(pairs, name))
        rep = check_mirrored_pair(mp)
        assert rep.passed, rep.summary()
        assert mp.flags.get("pmp_ok") and mp.flags.get("quasi_abelian_ok")
        assert mp.reflected() is mp.reflected()


def test_dual_pair_of_negative_fails():
    mp = dual_pair(pair_h4_negative(mode="lambda"))
    check_mirrored_pair(mp)
    assert mp.flags.get("pmp_ok") is False


def test_pair_shape_validation():
    p = pair_subgroup_indicator(G="C3")
    with pytest.raises(ValueError):
        PartialMatchedPair(p.L, p.H, p.action, p.coaction)


def test_quasi_abelian_refuses_unverified_non_partial_action():
    from parthopf.partial import PartialAction

    p = pair_subgroup_indicator()
    H, L = p.H, p.L
    cols = [{a: QQ(2)} for _ in range(H.dim) for a in range(L.dim)]
    bad = PartialAction(H, L.algebra, LinearMap(QQ, (H.dim, L.dim), (L.dim,), cols))
    q = PartialMatchedPair(H, L, bad, p.coaction)
    with pytest.raises(CheckRefused):
        check_quasi_abelian(q)
