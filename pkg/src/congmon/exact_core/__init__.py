"""Exact fields, matrices, elimination and the generic tangent solver."""

from .fields import (
    QI,
    Field,
    FpElement,
    GaussianRational,
    Q,
    Scalar,
    field_from_tag,
    format_rational,
    prime_field,
)
from .linalg import (
    SpanSolver,
    TangentBasis,
    determinant,
    inverse,
    kernel,
    kernel_intersection,
    linear_combination,
    rank,
    rref,
    solve_tangent,
    span_dim,
    span_equal,
)
from .matrix import (
    ExactMatrix,
    block_matrix,
    commutator,
    congruent_transform,
    direct_sum,
    elementary,
    is_solution,
    is_tangent,
)
from .serialize import dumps_matrix, loads_matrix, matrix_from_json, matrix_to_json

__all__ = [
    "Q",
    "QI",
    "Field",
    "FpElement",
    "GaussianRational",
    "Scalar",
    "field_from_tag",
    "format_rational",
    "prime_field",
    "ExactMatrix",
    "block_matrix",
    "commutator",
    "congruent_transform",
    "direct_sum",
    "elementary",
    "is_solution",
    "is_tangent",
    "SpanSolver",
    "TangentBasis",
    "determinant",
    "inverse",
    "kernel",
    "kernel_intersection",
    "linear_combination",
    "rank",
    "rref",
    "solve_tangent",
    "span_dim",
    "span_equal",
    "dumps_matrix",
    "loads_matrix",
    "matrix_from_json",
    "matrix_to_json",
]
