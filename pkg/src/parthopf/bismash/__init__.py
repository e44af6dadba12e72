"""The partial bismash product, its alternate construction and the duality isomorphism."""
from .core import (
    BismashHopf,
    ThetaResult,
    bismash,
    bismash_alt,
    closed_form_antipode_ambient,
    compare_constructions,
    mirrored_bismash,
    theta_iso,
)
