"""Deciding when ``Sol_A = {X : X^t A X = A}`` is a group, with certified witnesses."""

from .criteria import (
    GroupVerdict,
    build_singular_solution,
    build_star_witness,
    brute_force_monoid,
    is_group_complex,
    is_group_direct_sum,
    is_group_jordan_chevalley,
    is_group_star,
    necessary_condition_anyfield,
    pencil_completely_singular,
)

__all__ = [
    "GroupVerdict",
    "brute_force_monoid",
    "build_singular_solution",
    "build_star_witness",
    "is_group_complex",
    "is_group_direct_sum",
    "is_group_jordan_chevalley",
    "is_group_star",
    "necessary_condition_anyfield",
    "pencil_completely_singular",
]
