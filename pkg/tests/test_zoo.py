import pytest

from parthopf.exactmath import QQ, QQi, PrimeField
from parthopf.hopfcore import check_hopf, grouplikes, is_identity
from parthopf.report import CheckRefused
from parthopf.zoo import (
    HOPF_NAMES,
    PAIR_NAMES,
    a22,
    a4prime,
    build_hopf,
    build_pair,
    find_lambdas,
    find_zs,
    fourth_root,
    group_algebra,
    h16,
    h4_tensor_a22,
    h4_tensor_h4,
    lambda_z_sweep,
    negative_completion_sweep,
    pair_normal_average,
    pair_adjoint,
    symmetric,
    sweedler_h4,
)

F_I = QQi()


@pytest.mark.parametrize("make,dim", [
    (sweedler_h4, 4), (a22, 8), (lambda: a4prime(F_I), 8), (lambda: h16(F_I), 16),
    (h4_tensor_h4, 16), (h4_tensor_a22, 32),
], ids=["h4", "a22", "a4prime", "h16", "h4xh4", "h4xa22"])
def test_dimensions(make, dim):
    assert make().dim == dim


def test_grouplike_counts():
    B = sweedler_h4()
    assert sorted(B.labels[i] for g in grouplikes(B) for i in g) == ["1", "c"]
    assert len(grouplikes(a22())) == 4
    assert len(grouplikes(h16(F_I))) == 8


def test_h16_commutation_relations():
    H = h16(F_I)
    q = fourth_root(F_I)
    assert q * q == F_I(-1)
    g, h, x = H.vec("g"), H.vec("h"), H.vec("x")
    xg = H.product(x, g)
    gx = H.product(g, x)
    assert xg == {k: q * v for k, v in gx.items()}
    assert H.product(g, h) == H.product(h, g)
    assert H.product(x, x) == {}


def test_antipode_squares():
    assert not is_identity(h16(F_I).antipode @ h16(F_I).antipode)
    B = group_algebra(symmetric(3))
    assert is_identity(B.antipode @ B.antipode)


def test_characteristic_two_is_rejected():
    with pytest.raises(ValueError, match="characteristic"):
        sweedler_h4(PrimeField(2))
    with pytest.raises(CheckRefused, match="characteristic 2"):
        pair_normal_average(F=PrimeField(2))


def test_hypothesis_errors_name_the_failure():
    with pytest.raises(CheckRefused, match="not normal"):
        pair_normal_average("S3", "e,(12)")
    with pytest.raises(KeyError, match="not an element"):
        pair_normal_average("S3", "e,(1234)")


def test_registry_builds_every_name():
    for name in HOPF_NAMES:
        arg = name.replace("<G>", "S3")
        F = F_I if name in ("h16",) else QQ
        assert check_hopf(build_hopf(arg, F)).passed, name
    for name in PAIR_NAMES:
        p = build_pair(name)
        assert p.name.startswith(name)


def test_registry_rejects_unknown_names():
    with pytest.raises(KeyError, match="unknown"):
        build_hopf("nope")


def test_pairs_over_prime_fields():
    p = pair_normal_average(F=PrimeField(3))
    assert p.field.characteristic == 3
    pair_adjoint("S3", F=PrimeField(5))
    with pytest.raises(CheckRefused):
        pair_adjoint("S3", F=PrimeField(3))


def test_search_finds_subgroup_indicators():
    B = group_algebra(symmetric(3))
    # subgroups of S3: trivial, three of order 2, A3, S3
    assert len(find_lambdas(B, [0, 1])) == 6
    assert len(find_zs(sweedler_h4(), [0, 1, QQ(1) / 2])) >= 2


def test_lambda_z_sweep_agrees_and_sees_both_outcomes():
    r = lambda_z_sweep(n=60, seed=3)
    assert r.lemma_agrees() and r.prop_agrees()
    assert r.sees_both("quasi_abelian_pmp") and r.sees_both("pmp")
    assert r.invalid and all(rec.general_rejects_invalid for rec in r.invalid)


def test_lambda_z_sweep_over_gf5():
    r = lambda_z_sweep(PrimeField(5), n=30, seed=1)
    assert r.lemma_agrees() and r.prop_agrees()


@pytest.mark.parametrize("mode", ["lambda", "z"])
def test_negative_never_completes(mode):
    out = negative_completion_sweep(1, mode, n=15, seed=2)
    assert out and not any(ok for _, ok in out)
