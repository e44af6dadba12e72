import pytest

from parthopf.exactmath import QQ, LinearMap
from parthopf.bismash import bismash, bismash_alt, compare_constructions, theta_iso
from parthopf.hopfcore import check_hopf, fingerprint, fingerprint_compare, solve_antipode, tensor_hopf
from parthopf.matchedpair import lambda_z_pair
from parthopf.report import CheckRefused
from parthopf.zoo import cyclic, group_algebra, h4_tensor_h4, pair_subgroup_indicator, pair_normal_average, pair_h4_negative

from conftest import pick


def _rank(B, f):
    return LinearMap(B.field, (B.dim,), (B.dim,), [f(i) for i in range(B.dim)]).to_matrix().rank()


def expected_dim(p):
    """For scalar data the two projections act on separate tensor legs:
    rank(h ↦ λ(h1)h2) · rank(x ↦ xz)."""
    H, L, lam, z = p.H, p.L, p.meta["lambda"], p.meta["z"]
    F = p.field

    def hpart(i):
        out = {}
        for (a, b), c in H.coproduct({i: F.one}).items():
            if lam.get(a):
                out[b] = out.get(b, F.zero) + c * lam[a]
        return {k: v for k, v in out.items() if v}

    return _rank(H, hpart) * _rank(L, lambda i: L.product({i: F.one}, z))


def test_every_positive_pair_gives_a_hopf_algebra(pairs, bismash_of):
    for name, p in pairs.items():
        b = bismash_of(p)
        assert b.report.passed, (name, b.report.summary())
        assert b.antipode_source == "closed form"
        assert b.report.get("antipode agrees with solver").passed
        assert check_hopf(b.result).passed


def test_dimensions_match_the_rank_oracle(pairs, bismash_of):
    for name, p in pairs.items():
        if p.is_lambda_z:
            assert bismash_of(p).result.dim == expected_dim(p), name


def test_known_dimensions(pairs, bismash_of):
    assert bismash_of(pick(pairs, "pair_normal_average(C4")).result.dim == 4
    assert bismash_of(pick(pairs, "pair_a22")).result.dim == 16
    assert bismash_of(pick(pairs, "pair_a4prime")).result.dim == 32


def test_normal_form_spans_and_is_fixed(pairs, bismash_of):
    b = bismash_of(pick(pairs, "pair_normal_average(S3"))
    P = b.projection
    assert P @ P == P
    for v in b.sub.basis:
        assert P.apply(v) == v
    nL, nH = b.pair.L.dim, b.pair.H.dim
    images = [b.element(x, h) for x in range(nL) for h in range(nH)]
    M = LinearMap(QQ, (nL * nH,), (b.sub.dim,), images).to_matrix()
    assert M.rank() == b.sub.dim


def test_unit_of_result_is_one_one(pairs, bismash_of):
    b = bismash_of(pick(pairs, "pair_normal_average(C4"))
    L, H = b.pair.L, b.pair.H
    one = {}
    for x, a in L.unit.items():
        for h, c in H.unit.items():
            for k, v in b.element(x, h).items():
                one[k] = one.get(k, QQ.zero) + a * c * v
    assert b.result.unit == {k: v for k, v in one.items() if v}


def test_trivial_pair_gives_tensor_product():
    H, L = group_algebra(cyclic(3)), group_algebra(cyclic(2))
    p = lambda_z_pair(H, L, dict(H.counit), dict(L.unit))
    b = bismash(p)
    assert b.report.passed and b.result.dim == 6
    rep = fingerprint_compare(b.result, tensor_hopf(L, H))
    assert rep.passed
    assert fingerprint(b.result) == fingerprint(group_algebra(cyclic(6)))


def test_a22_bismash_has_the_h4_tensor_h4_fingerprint(pairs, bismash_of):
    b = bismash_of(pick(pairs, "pair_a22"))
    assert fingerprint(b.result) == fingerprint(h4_tensor_h4())


def test_both_orders_give_the_same_hopf_algebra():
    p = pair_normal_average()
    a = bismash(p)
    c = bismash_alt(pair_normal_average())
    assert c.report.passed, c.report.summary()
    assert compare_constructions(a, c).passed
    assert c.extras["overline_dim"] >= c.result.dim


@pytest.mark.parametrize("make", [pair_normal_average, lambda: pair_normal_average("S3", "e,(123),(132)"), lambda: pair_subgroup_indicator(N2="e")])
def test_duality_isomorphism(make):
    t = theta_iso(make())
    assert t.report.passed, t.report.summary()
    for line in ("θ bijective", "θ multiplicative", "θ comultiplicative", "θ commutes with antipodes", "θ⁻¹ formula"):
        assert t.report.get(line).passed, line


def test_negative_pair_is_refused():
    with pytest.raises(CheckRefused, match="quasi-abelian"):
        bismash(pair_h4_negative())


def test_solver_path_matches_closed_form():
    p = pair_normal_average()
    b = bismash(p, solve=True)
    assert solve_antipode(b.result) == b.result.antipode
