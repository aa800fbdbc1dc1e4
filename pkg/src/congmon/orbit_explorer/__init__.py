"""Stabilizers and orbit samples for the left action of Sol_A on matrices."""

from .stabilizers import (
    BULLET_PREDICTION,
    FORCED_ONE,
    FREE,
    ROWS_16,
    ROWS_25,
    ROWS_34,
    SHAPES,
    ZERO,
    StabilizerReport,
    TrivialStabilizerReport,
    a8sq_display,
    a8sq_element,
    orbit_display_e_identity,
    orbit_sample,
    singular_subspace_2x2,
    stabilizer_solA6,
    stabilizer_trivial_solA8sq,
    subspace_shapes,
)

__all__ = [
    "BULLET_PREDICTION",
    "FORCED_ONE",
    "FREE",
    "ROWS_16",
    "ROWS_25",
    "ROWS_34",
    "SHAPES",
    "ZERO",
    "StabilizerReport",
    "TrivialStabilizerReport",
    "a8sq_display",
    "a8sq_element",
    "orbit_display_e_identity",
    "orbit_sample",
    "singular_subspace_2x2",
    "stabilizer_solA6",
    "stabilizer_trivial_solA8sq",
    "subspace_shapes",
]
