import pytest
from hypothesis import given, settings, strategies as st

from parthopf.exactmath import QQ, LinearMap
from parthopf.hopfcore import check_hopf, op_cop
from parthopf.partial import (
    PartialAction,
    PartialCoaction,
    action_from_lambda,
    adjoint_pair,
    check_global_action,
    check_left_coaction_direct,
    check_left_partial_coaction,
    check_partial_action,
    check_partial_coaction,
    check_right_action_direct,
    check_right_partial_action,
    check_symmetric_action,
    coaction_from_z,
    lambda_condition_failure,
    lambda_symmetric,
    z_condition_failure,
)
from parthopf.report import CheckRefused
from parthopf.zoo import cyclic, dual_group_algebra, group_algebra, symmetric, sweedler_h4

S3 = symmetric(3)
KS3 = group_algebra(S3)
KS3D = dual_group_algebra(S3)
H4 = sweedler_h4()


def raw_action(H, A, lam):
    cols = [({a: lam[h]} if lam.get(h) else {}) for h in range(H.dim) for a in range(A.dim)]
    return PartialAction(H, A, LinearMap(H.field, (H.dim, A.dim), (A.dim,), cols), "left")


def raw_coaction(C, L, z):
    cols = [{c * L.dim + k: x for k, x in z.items()} for c in range(C.dim)]
    return PartialCoaction(L, C, LinearMap(L.field, (C.dim,), (C.dim, L.dim), cols), "right")


def subgroup_indicator(G, vals):
    """Oracle: on kG the scalar partial actions are exactly subgroup indicators."""
    if any(v not in (0, 1) for v in vals):
        return False
    S = [i for i, v in enumerate(vals) if v]
    return bool(S) and vals[0] == 1 and G.is_subgroup(S)


vals_s3 = st.lists(st.sampled_from([0, 0, 1, 1, 2, -1]), min_size=6, max_size=6)


@settings(max_examples=60, deadline=None)
@given(vals_s3)
def test_lambda_on_group_algebra_matches_subgroup_oracle(vals):
    lam = {i: QQ(v) for i, v in enumerate(vals) if v}
    expected = subgroup_indicator(S3, vals)
    assert (lambda_condition_failure(KS3, lam) is None) == expected
    pa = raw_action(KS3, cyclic_algebra(), lam)
    check_partial_action(pa)
    assert pa.flags.get("partial_ok") is expected


def cyclic_algebra():
    return group_algebra(cyclic(2)).algebra


@settings(max_examples=60, deadline=None)
@given(vals_s3)
def test_z_on_dual_group_algebra_matches_subgroup_oracle(vals):
    z = {i: QQ(v) for i, v in enumerate(vals) if v}
    expected = subgroup_indicator(S3, vals)
    assert (z_condition_failure(KS3D, z) is None) == expected
    pc = raw_coaction(group_algebra(cyclic(2)).coalgebra, KS3D, z)
    check_partial_coaction(pc)
    assert pc.flags.get("partial_ok") is expected


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([0, 1, -1, 2, QQ(1) / 2]), min_size=4, max_size=4))
def test_lambda_criterion_agrees_with_general_checker_on_h4(vals):
    lam = {i: QQ(v) for i, v in enumerate(vals) if v}
    pa = raw_action(H4, cyclic_algebra(), lam)
    check_partial_action(pa)
    assert pa.flags.get("partial_ok") is (lambda_condition_failure(H4, lam) is None)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([0, 1, -1, QQ(1) / 2, -QQ(1) / 2]), min_size=4, max_size=4))
def test_z_criterion_agrees_with_general_checker_on_h4(vals):
    z = {i: QQ(v) for i, v in enumerate(vals) if v}
    pc = raw_coaction(cyclic_algebra_coalg(), H4, z)
    check_partial_coaction(pc)
    assert pc.flags.get("partial_ok") is (z_condition_failure(H4, z) is None)


def cyclic_algebra_coalg():
    return group_algebra(cyclic(2)).coalgebra


def test_h4_lambda_family_is_partial():
    for beta in (0, 1, -3, QQ(2) / 5):
        lam = H4.vec({"1": 1, "x": beta, "xc": -beta})
        assert lambda_condition_failure(H4, lam) is None
        pa = action_from_lambda(H4, cyclic_algebra(), lam)
        assert check_partial_action(pa).passed


def test_counit_gives_a_global_action_and_indicators_do_not():
    pa = action_from_lambda(KS3, cyclic_algebra(), dict(KS3.counit))
    check_global_action(pa)
    assert pa.flags.get("global_ok") is True
    pa = action_from_lambda(KS3, cyclic_algebra(), KS3.vec({"e": 1, "(12)": 1}))
    rep = check_partial_action(pa)
    assert rep.passed and pa.flags.get("global_ok") is False
    assert any(n.startswith("action global: no") for n in rep.notes)


def test_invalid_lambda_is_refused_with_reason():
    with pytest.raises(CheckRefused, match="lambda"):
        action_from_lambda(KS3, cyclic_algebra(), KS3.vec({"e": 1, "(12)": 1, "(13)": 1}))
    with pytest.raises(CheckRefused, match="1_H"):
        action_from_lambda(KS3, cyclic_algebra(), KS3.vec({"(12)": 1}))


def test_invalid_z_is_refused():
    with pytest.raises(CheckRefused, match="z"):
        coaction_from_z(cyclic_algebra_coalg(), KS3D, KS3D.vec({"p_e": 1, "p_(12)": 1, "p_(13)": 1}))


def test_witness_names_failed_axiom_and_basis_tuple():
    pa = raw_action(KS3, cyclic_algebra(), KS3.vec({"e": 1, "(12)": 1, "(13)": 1}))
    rep = check_partial_action(pa)
    f = rep.first_failure()
    assert f.name == "action partial associativity"
    assert set(f.witness) >= {"h", "g", "a", "lhs", "rhs"}
    assert f.witness["lhs"] != f.witness["rhs"]


def test_symmetric_lambda_actions_on_abelian_group():
    G = cyclic(4)
    B = group_algebra(G)
    lam = B.vec({"e": 1, "c2": 1})
    assert lambda_symmetric(B, lam)
    pa = action_from_lambda(B, cyclic_algebra(), lam)
    assert check_symmetric_action(pa).passed


def test_adjoint_pair_axioms():
    lam = KS3.vec({"e": 1, "(12)": 1})
    third = QQ(1) / 3
    z = KS3.vec({"e": third, "(123)": third, "(132)": third})
    pa, pc = adjoint_pair(KS3, lam, z)
    assert pa.flags.get("partial_ok") and pc.flags.get("partial_ok")
    assert check_hopf(pa.hopf).passed


def test_adjoint_pair_refuses_noncentral_z():
    lam = dict(KS3.counit)
    with pytest.raises(CheckRefused, match="central"):
        adjoint_pair(KS3, lam, KS3.vec({"e": QQ(1) / 2, "(12)": QQ(1) / 2}))


def _right_from_left(pa):
    """Re-read a left action of H as a right action of H^{op,cop} on A^op (same numbers, flipped legs)."""
    from parthopf.partial import opposite_algebra

    flip = LinearMap.permutation(pa.field, (pa.algebra.dim, pa.hopf.dim), (1, 0))
    return PartialAction(op_cop(pa.hopf), opposite_algebra(pa.algebra), pa.act @ flip, "right")


@pytest.mark.parametrize("vals", [(1, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0), (1, 0, 0, 0, 1, 1)])
def test_reflected_and_direct_right_checkers_agree(vals):
    lam = {i: QQ(v) for i, v in enumerate(vals) if v}
    right = _right_from_left(raw_action(KS3, KS3.algebra, lam))
    direct = check_right_action_direct(right).passed
    reflected = check_right_partial_action(right).results
    assert direct == all(r.passed for r in reflected[:3])
    assert right.flags.get("partial_ok") == direct == subgroup_indicator(S3, list(vals))


@pytest.mark.parametrize("vals", [(1, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 1, 1)])
def test_reflected_and_direct_left_coaction_checkers_agree(vals):
    from parthopf.partial import coopposite_coalgebra

    z = {i: QQ(v) for i, v in enumerate(vals) if v}
    C = KS3.coalgebra
    n = KS3D.dim
    cols = [{k * C.dim + c: x for k, x in z.items()} for c in range(C.dim)]
    left = PartialCoaction(op_cop(KS3D), coopposite_coalgebra(C), LinearMap(QQ, (C.dim,), (n, C.dim), cols), "left")
    direct = check_left_coaction_direct(left).passed
    check_left_partial_coaction(left)
    assert left.flags.get("partial_ok") == direct == subgroup_indicator(S3, list(vals))


def test_checkers_reject_wrong_side():
    pa = raw_action(KS3, cyclic_algebra(), dict(KS3.counit))
    with pytest.raises(ValueError):
        check_right_partial_action(pa)
    with pytest.raises(ValueError):
        check_partial_action(_right_from_left(pa))


def test_shape_validation():
    with pytest.raises(ValueError):
        PartialAction(KS3, cyclic_algebra(), LinearMap.identity(QQ, (6,)), "left")
