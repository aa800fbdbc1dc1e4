"""Parametric elements of Sol_{A_n} and Sol_{A_n^2} with exact membership checks."""

from .builders import (
    build,
    build_D,
    build_N,
    compose,
    conjugation_check,
    det,
    factor_params,
    invert,
    invert_diag,
    invert_nil,
    merge,
    prod_multiplicative_holds,
    refactor_N,
    semidirect_factor,
    z_params,
)
from .params import GroupParams, block_size, nil_count, nil_mask, num_blocks
from .star import closed_form_agrees, hessenberg_det, star_closed_form, star_sequence

__all__ = [
    "GroupParams",
    "block_size",
    "nil_count",
    "nil_mask",
    "num_blocks",
    "build",
    "build_D",
    "build_N",
    "compose",
    "conjugation_check",
    "det",
    "factor_params",
    "invert",
    "invert_diag",
    "invert_nil",
    "merge",
    "prod_multiplicative_holds",
    "refactor_N",
    "semidirect_factor",
    "z_params",
    "closed_form_agrees",
    "hessenberg_det",
    "star_closed_form",
    "star_sequence",
]
