"""Exact scalars, dense matrices, sparse tensor maps."""
from .fields import (
    QQ,
    Ext,
    ExtensionField,
    Field,
    FieldMismatch,
    Mod,
    PrimeField,
    QQi,
    RationalField,
    field_from_header,
    parse_field,
)
from .matrix import (
    DependencyTracker,
    Matrix,
    identity,
    image_basis,
    kernel_basis,
    kron,
    krylov_minpoly,
    restrict_operator,
    rref_rows,
    solve_linear,
)
from .linmap import LinearMap, Tensor, add_into, compare_maps, flat_index, materialize, unflat_index
from .subspace import NotInSubspace, Subspace
from .characters import eigenvalues_in_field, field_roots, minpoly_factor_characters

__all__ = [
    "QQ", "Ext", "ExtensionField", "Field", "FieldMismatch", "Mod", "PrimeField", "QQi",
    "RationalField", "field_from_header", "parse_field", "DependencyTracker", "Matrix",
    "identity", "image_basis", "kernel_basis", "kron", "krylov_minpoly", "restrict_operator",
    "rref_rows", "solve_linear", "LinearMap", "Tensor", "add_into", "compare_maps",
    "flat_index", "materialize", "unflat_index", "eigenvalues_in_field", "field_roots",
    "minpoly_factor_characters", "NotInSubspace", "Subspace",
]
