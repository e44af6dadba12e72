"""Hopf algebras by structure constants: containers, axiom checks, constructions, invariants."""
from .data import (
    AlgebraData,
    CoalgebraData,
    HopfData,
    dense_to_sparse,
    format_vector,
    make_algebra,
    make_coalgebra,
    make_hopf,
    relabel,
    sparse_to_dense,
)
from .checks import (
    check_algebra,
    check_antipode,
    check_bialgebra,
    check_coalgebra,
    check_hopf,
    format_tensor,
    mutate,
    run_identity,
)
from .ops import (
    antipode_solution_space,
    change_basis,
    convolution,
    coopposite,
    counit_unit,
    dual_hopf,
    is_identity,
    op_cop,
    opposite,
    permute_basis,
    solve_antipode,
    tensor_hopf,
)
from .invariants import (
    SUFFICIENCY_NOTE,
    Fingerprint,
    antipode_order,
    fingerprint,
    fingerprint_compare,
    grouplikes,
    integral_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
