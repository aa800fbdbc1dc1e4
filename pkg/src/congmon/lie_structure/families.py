"""Family tags, family matrices and the zero-padding used for odd ``n``."""

from __future__ import annotations

from ..errors import PreconditionError
from ..exact_core import ExactMatrix, Field, Q

AN_ODD = "An-odd"
AN_EVEN = "An-even"
AN2_MOD0 = "An2-mod0"
AN2_MOD1 = "An2-mod1"
AN2_MOD2 = "An2-mod2"
AN2_MOD3 = "An2-mod3"

AN_FAMILIES = (AN_ODD, AN_EVEN)
AN2_FAMILIES = (AN2_MOD0, AN2_MOD1, AN2_MOD2, AN2_MOD3)
FAMILIES = AN_FAMILIES + AN2_FAMILIES

# smallest n for which each A_n^2 case is defined
AN2_MIN_N = {AN2_MOD0: 4, AN2_MOD2: 6, AN2_MOD1: 5, AN2_MOD3: 7}


def an_family(n: int) -> str:
    if n < 2:
        raise PreconditionError("A_n families need n >= 2")
    return AN_ODD if n % 2 else AN_EVEN


def an2_family(n: int) -> str:
    fam = {0: AN2_MOD0, 1: AN2_MOD1, 2: AN2_MOD2, 3: AN2_MOD3}[n % 4]
    if n < AN2_MIN_N[fam]:
        raise PreconditionError(f"{fam} needs n >= {AN2_MIN_N[fam]}, got {n}")
    return fam


def family_for(kind: str, n: int) -> str:
    """``kind`` is ``"an"`` or ``"an2"``."""
    if kind == "an":
        return an_family(n)
    if kind == "an2":
        return an2_family(n)
    raise PreconditionError(f"unknown family kind {kind!r}")


def check_family(family: str, n: int) -> None:
    if family in AN_FAMILIES:
        expected = an_family(n)
    elif family in AN2_FAMILIES:
        expected = an2_family(n)
    else:
        raise PreconditionError(f"unknown family {family!r}")
    if expected != family:
        raise PreconditionError(f"n = {n} belongs to {expected}, not {family}")


def An(n: int, field: Field = Q) -> ExactMatrix:
    return ExactMatrix.from_entries(n, n, {(i, i + 1): 1 for i in range(n - 1)}, field)


def An2(n: int, field: Field = Q) -> ExactMatrix:
    return ExactMatrix.from_entries(n, n, {(i, i + 2): 1 for i in range(n - 2)}, field)


def family_matrix(family: str, n: int, field: Field = Q) -> ExactMatrix:
    check_family(family, n)
    return An(n, field) if family in AN_FAMILIES else An2(n, field)


def is_padded_family(family: str) -> bool:
    return family in (AN2_MOD1, AN2_MOD3)


def pad_for_blocks(M: ExactMatrix) -> ExactMatrix:
    """Prepend a zero row and a zero column."""
    n, m = M.shape
    ents = {(i + 1, j + 1): x for i, r in enumerate(M.rows) for j, x in enumerate(r) if x}
    return ExactMatrix.from_entries(n + 1, m + 1, ents, M.field)


def strip(M: ExactMatrix) -> ExactMatrix:
    """Inverse of :func:`pad_for_blocks`; the dropped row and column must be zero."""
    if any(M.rows[0]) or any(r[0] for r in M.rows):
        raise PreconditionError("strip: first row/column not zero")
    return M.submatrix(1, M.nrows, 1, M.ncols)
