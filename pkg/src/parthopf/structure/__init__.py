"""Integral spaces and semisimplicity."""
from .core import (
    IntegralSpace,
    check_integral_product,
    is_semisimple,
    left_integrals,
    right_integrals,
    semisimplicity_equivalence,
)
