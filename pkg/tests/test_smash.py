import pytest

from parthopf.exactmath import QQ, LinearMap
from parthopf.partial import PartialAction
from parthopf.report import CheckRefused
from parthopf.smash import bilinear, partial_smash, partial_smash_coproduct, projection_pi_formula
from parthopf.zoo import cyclic, group_algebra, pair_subgroup_indicator, pair_normal_average, symmetric

CASES = [
    ("indicator N'=C2", lambda: pair_subgroup_indicator()),
    ("indicator N'=e", lambda: pair_subgroup_indicator(N2="e")),
    ("indicator C3", lambda: pair_subgroup_indicator(G="C3", N="e", G2="C3", N2="e")),
    ("average C4", lambda: pair_normal_average()),
    ("average S3", lambda: pair_normal_average("S3", "e,(123),(132)")),
]


def rank_of(H, f):
    return LinearMap(H.field, (H.dim,), (H.dim,), [f(i) for i in range(H.dim)]).to_matrix().rank()


def lambda_rank(H, lam):
    """rank of h ↦ λ(h1)h2, which cuts A⊗H down to A#̲H when the action is scalar."""
    def f(i):
        out = {}
        for (a, b), c in H.coproduct({i: QQ.one}).items():
            if lam.get(a):
                out[b] = out.get(b, QQ.zero) + c * lam[a]
        return {k: v for k, v in out.items() if v}
    return rank_of(H, f)


def z_rank(L, z):
    return rank_of(L, lambda i: L.product({i: QQ.one}, z))


@pytest.mark.parametrize("name,make", CASES, ids=[c[0] for c in CASES])
def test_partial_smash_dimension_matches_rank_oracle(name, make):
    p = make()
    S = partial_smash(p.action)
    assert S.report.passed, S.report.summary()
    assert S.algebra.dim == p.L.dim * lambda_rank(p.H, p.meta["lambda"])


@pytest.mark.parametrize("name,make", CASES, ids=[c[0] for c in CASES])
def test_partial_smash_coproduct_dimension_matches_rank_oracle(name, make):
    p = make()
    C = partial_smash_coproduct(p.coaction)
    assert C.report.passed, C.report.summary()
    assert C.coalgebra.dim == p.H.dim * z_rank(p.L, p.meta["z"])
    assert C.report.get("Π element form").passed


def test_known_dimensions():
    assert partial_smash(pair_subgroup_indicator().action).algebra.dim == 4
    assert partial_smash(pair_subgroup_indicator(N2="e").action).algebra.dim == 2
    assert partial_smash(pair_normal_average().action).algebra.dim == 8


def test_E_is_idempotent_and_fixes_the_image():
    S = partial_smash(pair_normal_average().action)
    assert S.E @ S.E == S.E
    for v in S.sub.basis:
        assert S.E.apply(v) == v


def test_ambient_right_unit_reflects_globality():
    glob = partial_smash(pair_subgroup_indicator().action)
    part = partial_smash(pair_subgroup_indicator(N2="e").action)
    assert "ambient right unit law: holds" in glob.report.notes
    assert "ambient right unit law: fails" in part.report.notes
    assert not part.ambient.unital and part.ambient.left_unital


def test_induced_unit_is_one_one():
    S = partial_smash(pair_normal_average().action)
    one = S.one_one()
    for v in S.sub.basis:
        assert bilinear(S.ambient.mult, one, v) == v
        assert bilinear(S.ambient.mult, v, one) == v


def test_pi_matches_element_formula():
    for _, make in CASES:
        pc = make().coaction
        C = partial_smash_coproduct(pc)
        assert C.Pi == projection_pi_formula(pc)
        assert C.Pi @ C.Pi == C.Pi


def test_unverified_action_is_refused():
    H = group_algebra(cyclic(2))
    A = H.algebra
    cols = [{a: QQ.one} for _ in range(2) for a in range(2)]
    pa = PartialAction(H, A, LinearMap(QQ, (2, 2), (2,), cols))
    with pytest.raises(CheckRefused):
        partial_smash(pa)


def test_global_group_action_gives_full_smash():
    G = symmetric(3)
    H = group_algebra(G)
    from parthopf.partial import action_from_lambda

    pa = action_from_lambda(H, group_algebra(cyclic(2)).algebra, dict(H.counit))
    S = partial_smash(pa)
    assert S.algebra.dim == 12
