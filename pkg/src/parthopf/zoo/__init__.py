"""Groups, Hopf algebras and partial matched pairs used by the examples, with a name registry."""
from .groups import (
    GroupPresentation,
    alternating_subgroup,
    cyclic,
    dihedral,
    direct_product,
    group_by_name,
    klein,
    symmetric,
)
from .hopf import (
    a4prime,
    a22,
    dual_group_algebra,
    fourth_root,
    group_algebra,
    h4_tensor_a22,
    h4_tensor_h4,
    h16,
    pointed_rank_one,
    sweedler_h4,
)
from .pairs import (
    NEGATIVE_BLAME,
    h4_negative_lambda,
    h4_negative_z,
    pair_subgroup_indicator,
    pair_normal_average,
    pair_a4prime,
    pair_a22,
    pair_adjoint,
    pair_h4_negative,
    pair_kGkG,
)
from .registry import HOPF_NAMES, PAIR_NAMES, acceptance_hopf_zoo, build_hopf, build_pair, positive_pairs
from .search import (
    default_values,
    find_adjoint_data,
    find_lambdas,
    find_zs,
    lambda_z_sweep,
    negative_completion_sweep,
    sweep_pool,
)
