"""Partial matched pairs: axioms, quasi-abelian test, globality, λ/z criteria, dual pairs."""
from .core import (
    LambdaZVerdict,
    MirroredPair,
    PartialMatchedPair,
    ambient_comult,
    ambient_counit,
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
    lambda_z_predicates,
)
