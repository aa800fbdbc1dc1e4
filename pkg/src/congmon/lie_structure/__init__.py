"""Closed-form Lie algebras of ``Sol_{A_n}`` and ``Sol_{A_n^2}`` checked against the generic solver."""

from .bases import basis_solAn, basis_solAn2, basis_solAn2_padded
from .brackets import BracketTable, bracket_table, format_lincomb
from .families import (
    AN2_FAMILIES,
    AN2_MIN_N,
    AN2_MOD0,
    AN2_MOD1,
    AN2_MOD2,
    AN2_MOD3,
    AN_EVEN,
    AN_FAMILIES,
    AN_ODD,
    FAMILIES,
    An,
    An2,
    an2_family,
    an_family,
    check_family,
    family_for,
    family_matrix,
    is_padded_family,
    pad_for_blocks,
    strip,
)
from .fixtures import FIXTURES, Mismatch, TableFixture, compare_with_fixture, untabulated
from .generators import GeneratorSet, generators, generators_solAn, generators_solAn2
from .series import (
    RadicalReport,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    phi_morphism_check,
    radical_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
