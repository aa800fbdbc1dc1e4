"""Star recursions supplying the lower entries of the N templates."""

from __future__ import annotations

from ..exact_core import ExactMatrix, Field
from ..lie_structure.families import AN2_MOD0, AN2_MOD1, AN2_MOD3, AN_EVEN
from .params import GroupParams, block_size


def _blocks(p: GroupParams) -> list[ExactMatrix]:
    b = block_size(p.family)
    if b == 1:
        return [ExactMatrix([[x]], p.field) for x in p.nil]
    return list(p.nil)


def star_blocks(family: str, xs: list[ExactMatrix], up_to: int, lam: object, field: Field) -> list[ExactMatrix]:
    """``[x_1^*, ..., x_{up_to}^*]`` as b x b matrices; missing ``x_d`` count as zero."""
    b = xs[0].nrows if xs else block_size(family)
    zero = ExactMatrix.zeros(b, b, field)

    def x(d: int) -> ExactMatrix:
        return xs[d - 1] if 1 <= d <= len(xs) else zero

    bT = ExactMatrix([[0, lam], [0, 0]], field).T if family == AN2_MOD3 else None
    st: list[ExactMatrix] = []
    for l in range(1, up_to + 1):
        acc = zero
        if family in (AN_EVEN, AN2_MOD0, AN2_MOD1, AN2_MOD3):
            for r in range(1, l):
                t = l - r
                if family in (AN2_MOD1, AN2_MOD3):
                    # only terms with t of the same parity as l survive
                    if (t - l) % 2:
                        continue
                acc = acc + x(r).T @ (x(t).T - st[t - 1])
            if family == AN2_MOD3 and l % 2:
                acc = acc + x(l + 1).T @ bT
        st.append(acc)
    return st


def star_sequence(params: GroupParams, up_to: int) -> list:
    """``x_1^*, ..., x_l^*`` for the family of ``params`` (scalars for A_n)."""
    st = star_blocks(params.family, _blocks(params), up_to, params.lam, params.field)
    if block_size(params.family) == 1:
        return [s[0, 0] for s in st]
    return st


def hessenberg_det(xs: list[ExactMatrix], l: int, field: Field) -> ExactMatrix:
    """Ordered determinant of the l x l Toeplitz-Hessenberg matrix with first row
    ``(x_1, ..., x_{l-1}, 0)``, ones on the subdiagonal and ``x_1..`` above.

    Expansion along the first row keeps products in left-to-right order, so it
    is meaningful for 2x2 block entries as well as scalars.
    """
    b = xs[0].nrows if xs else 1
    one = ExactMatrix.identity(b, field)
    zero = ExactMatrix.zeros(b, b, field)

    def x(d: int) -> ExactMatrix:
        return xs[d - 1] if 1 <= d <= len(xs) else zero

    T = [one]
    for j in range(1, l):
        acc = zero
        for k in range(1, j + 1):
            term = x(k) @ T[j - k]
            acc = acc + term if k % 2 else acc - term
        T.append(acc)
    acc = zero
    for k in range(1, l):
        term = x(k) @ T[l - k]
        acc = acc + term if k % 2 else acc - term
    return acc


def star_closed_form(params: GroupParams, l: int):
    """``x_l^*`` from the signed determinant formula (transposed back)."""
    xs = _blocks(params)
    D = hessenberg_det(xs, l, params.field)
    val = (D if l % 2 == 0 else -D).T
    return val[0, 0] if block_size(params.family) == 1 else val


def closed_form_agrees(params: GroupParams, up_to: int) -> bool:
    """Recursion equals the determinant closed form for ``l <= up_to``."""
    if params.family not in (AN_EVEN, AN2_MOD0):
        raise ValueError("closed form applies to the A_n even and mod 0 recursions")
    seq = star_sequence(params, up_to)
    return all(seq[l - 1] == star_closed_form(params, l) for l in range(1, up_to + 1))
