"""Smash products and smash coproducts, ambient and partial."""
from .core import (
    BAR,
    COBAR,
    UNDER,
    SmashAlgebra,
    SmashCoalgebra,
    ambient_smash_comult,
    ambient_smash_mult,
    bilinear,
    idempotent_image,
    induced_algebra,
    induced_coalgebra,
    map_witness,
    partial_smash,
    partial_smash_coproduct,
    pivot_labels,
    projection_pi_formula,
    restrict_endomorphism,
    smash_coproduct,
    smash_product,
)
