import pytest

from parthopf.exactmath import QQ, PrimeField
from parthopf.report import CheckRefused
from parthopf.structure import (
    check_integral_product,
    is_semisimple,
    left_integrals,
    right_integrals,
    semisimplicity_equivalence,
)
from parthopf.zoo import a22, cyclic, dihedral, dual_group_algebra, group_algebra, symmetric, sweedler_h4

from conftest import pick


@pytest.mark.parametrize("G", [cyclic(3), symmetric(3), dihedral(4)], ids=["C3", "S3", "D4"])
def test_group_algebra_integral_is_the_group_sum(G):
    B = group_algebra(G)
    t = left_integrals(B).generator()
    c = t[0]
    assert t == {i: c for i in range(G.order)}
    assert right_integrals(B).contains(t)


@pytest.mark.parametrize("G", [cyclic(4), symmetric(3)], ids=["C4", "S3"])
def test_dual_group_algebra_integral_is_delta_at_identity(G):
    B = dual_group_algebra(G)
    t = left_integrals(B).generator()
    assert list(t) == [B.basis("p_e")]


def test_h4_integrals_are_not_two_sided():
    B = sweedler_h4()
    tl, tr = left_integrals(B).generator(), right_integrals(B).generator()
    assert B.counit_of(tl) == 0
    assert not left_integrals(B).contains(tr)


@pytest.mark.parametrize("B,expected", [
    (group_algebra(symmetric(3)), True),
    (dual_group_algebra(symmetric(3)), True),
    (sweedler_h4(), False),
    (a22(), False),
    (group_algebra(cyclic(2), PrimeField(2)), False),
    (group_algebra(cyclic(3), PrimeField(2)), True),
], ids=["kS3", "kS3*", "H4", "A22", "kC2/GF2", "kC3/GF2"])
def test_semisimplicity_matches_known_cases(B, expected):
    assert is_semisimple(B) is expected


def test_integral_product_on_examples(pairs, bismash_of):
    for name, p in pairs.items():
        rep = check_integral_product(bismash_of(p))
        assert rep.passed, (name, rep.summary())


def test_integral_product_notes_when_hypotheses_fail(pairs, bismash_of):
    rep = check_integral_product(bismash_of(pick(pairs, "pair_a22")))
    assert any("outside" in n for n in rep.notes)
    rep = check_integral_product(bismash_of(pick(pairs, "pair_normal_average(C4")))
    assert not any("outside" in n for n in rep.notes)


def test_semisimplicity_equivalence_sees_both_outcomes(pairs, bismash_of):
    seen = set()
    for name, p in pairs.items():
        if not p.is_lambda_z:
            continue
        rep = semisimplicity_equivalence(bismash_of(p))
        assert rep.passed, (name, rep.summary())
        seen.add(rep.results[0].witness["result semisimple"])
    assert seen == {True, False}


def test_semisimplicity_equivalence_refuses_non_scalar_pairs(pairs, bismash_of):
    with pytest.raises(CheckRefused):
        semisimplicity_equivalence(bismash_of(pick(pairs, "pair_adjoint")))


def test_generator_requires_a_line():
    from parthopf.structure import IntegralSpace

    B = group_algebra(cyclic(2))
    sp = IntegralSpace("left", ({0: QQ.one}, {1: QQ.one}), B)
    with pytest.raises(ArithmeticError):
        sp.generator()
