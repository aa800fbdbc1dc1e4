"""Free algebra with transpose: the star map and its closure identities."""

from .freepoly import FreePoly, letter, letter_name, parse_letter
from .identities import (
    APPENDIX,
    BODY,
    CONVENTIONS,
    LEMMAS,
    READING_XX,
    READING_XY,
    READINGS,
    IdentityReport,
    L,
    matrix_substitute,
    monomial_counts,
    random_assignment,
    select_convention,
    star,
    star_one_matrix_check,
    star_one_sides,
    verify_lemma,
    verify_star_one,
    z_L,
    z_poly,
    z_star,
)

__all__ = [
    "FreePoly",
    "letter",
    "letter_name",
    "parse_letter",
    "APPENDIX",
    "BODY",
    "CONVENTIONS",
    "LEMMAS",
    "READING_XX",
    "READING_XY",
    "READINGS",
    "IdentityReport",
    "L",
    "matrix_substitute",
    "monomial_counts",
    "random_assignment",
    "select_convention",
    "star",
    "star_one_matrix_check",
    "star_one_sides",
    "verify_lemma",
    "verify_star_one",
    "z_L",
    "z_poly",
    "z_star",
]
