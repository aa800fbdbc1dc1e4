"""Closed-form bases of ``sol_{A_n}`` and ``sol_{A_n^2}`` built from the parametric templates."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError
from ..exact_core import ExactMatrix, Field, Q, TangentBasis
from .families import (
    AN2_MOD0,
    AN2_MOD1,
    AN2_MOD2,
    AN2_MOD3,
    an2_family,
    strip,
)


def basis_solAn(n: int, field: Field = Q) -> TangentBasis:
    """One basis matrix per free parameter ``x_0, x_1, ...`` of the closed-form solution."""
    if n < 2:
        raise PreconditionError("basis_solAn needs n >= 2")
    nparams = (n - 1) // 2 + 1 if n % 2 else (n - 2) // 2 + 1
    ents: list[dict] = [{} for _ in range(nparams)]
    for i in range(1, n + 1):
        ents[0][(i - 1, i - 1)] = 1 if i % 2 else -1
        for j in range(1, n + 1):
            if i == j:
                continue
            if n % 2:
                # odd n: (odd, even) positions carry +-x_k
                if i % 2 == 1 and j % 2 == 0 and i < j:
                    ents[(j - i + 1) // 2][(i - 1, j - 1)] = 1
                elif i % 2 == 1 and j % 2 == 0 and i > j:
                    ents[(i - j + 1) // 2][(i - 1, j - 1)] = -1
            else:
                if i % 2 == 1 and j % 2 == 1 and i < j:
                    ents[(j - i) // 2][(i - 1, j - 1)] = 1
                elif i % 2 == 0 and j % 2 == 0 and i > j:
                    ents[(i - j) // 2][(i - 1, j - 1)] = -1
    basis = tuple(ExactMatrix.from_entries(n, n, e, field) for e in ents)
    labels = tuple(f"x{k}" for k in range(nparams))
    return TangentBasis(n, basis, labels, labels)


@dataclass(frozen=True)
class _Block:
    """A free 2x2 block with its upper (I, I+d) and lower (J+d, J) placements.

    ``upper_parity``/``lower_parity`` select the block rows I and block columns J
    (1-based) where the block, respectively minus its transpose, is written.
    """

    name: str
    d: int
    upper_parity: int
    lower_parity: int
    lower_min: int = 1
    upper_only: tuple[tuple[int, int], ...] = ()


def _place(m: int, blk: _Block, r: int, c: int, coef: int, ents: dict) -> None:
    if blk.upper_only:
        for I, J in blk.upper_only:
            key = (2 * (I - 1) + r, 2 * (J - 1) + c)
            ents[key] = ents.get(key, 0) + coef
        return
    for I in range(1, m + 1 - blk.d):
        if I % 2 == blk.upper_parity:
            key = (2 * (I - 1) + r, 2 * (I - 1 + blk.d) + c)
            ents[key] = ents.get(key, 0) + coef
    for J in range(blk.lower_min, m + 1 - blk.d):
        if J % 2 == blk.lower_parity:
            key = (2 * (J - 1 + blk.d) + c, 2 * (J - 1) + r)
            ents[key] = ents.get(key, 0) - coef


def _rng(hi: int) -> range:
    """``0..hi`` inclusive (empty when ``hi < 0``)."""
    return range(0, hi + 1) if hi >= 0 else range(0)


def _an2_template(n: int):
    """Free parameters as ``(name, [(block, r, c, coef), ...])`` and the block size ``m``."""
    fam = an2_family(n)
    params: list[tuple[str, list]] = []
    full = [(0, 0), (0, 1), (1, 0), (1, 1)]

    def free(blk: _Block, mask, col0: int, row0: int = 1):
        for r, c in mask:
            params.append((f"x{row0 + r},{col0 + c}", [(blk, r, c, 1)]))

    if fam in (AN2_MOD0, AN2_MOD2):
        m = n // 2
        if fam == AN2_MOD0:
            ds = [2 * k for k in _rng((n - 4) // 4)]
        else:
            ds = [0] + [1 + 2 * k for k in _rng((n - 6) // 4)]
        for d in ds:
            free(_Block(f"X{d}", d, 1, 0), full, 2 * d + 1)
        return fam, m, params

    m = (n + 1) // 2
    top = [(1, 0), (1, 1)]
    bottom = [(0, 0), (0, 1)]
    x11 = _Block("X11", 0, 1, 0, upper_only=((1, 1),))
    x22 = _Block("X22", 0, 0, 1, lower_min=3)
    params.append(("x1,1", [(x11, 1, 1, 1), (x22, 1, 1, -1)]))
    free(x22, bottom, 2, row0=2)
    if fam == AN2_MOD1:
        for k in _rng((n - 5) // 4):
            free(_Block(f"Y1_{k}", 1 + 2 * k, 1, 0), top, 2 + 4 * k)
        for k in _rng((n - 9) // 4):
            free(_Block(f"Y2_{k}", 2 + 2 * k, 0, 1, lower_min=3), bottom, 6 + 4 * k, row0=2)
    else:
        z = _Block("Z24", 1, 0, 1, lower_min=3)
        x21 = _Block("X21", 0, 0, 0, upper_only=((2, 1),))
        params.append(("x2,1", [(x21, 0, 1, 1), (z, 1, 0, -1)]))
        free(z, bottom, 4, row0=2)
        for k in _rng((n - 7) // 4):
            free(_Block(f"Y1_{k}", 2 + 2 * k, 1, 0), top, 4 + 4 * k)
        for k in _rng((n - 11) // 4):
            free(_Block(f"Y2_{k}", 3 + 2 * k, 0, 1, lower_min=3), bottom, 8 + 4 * k, row0=2)
    return fam, m, params


def basis_solAn2_padded(n: int, field: Field = Q) -> TangentBasis:
    """The template basis in block coordinates: size ``n`` for even ``n``, ``n+1`` for odd."""
    fam, m, params = _an2_template(n)
    size = 2 * m
    mats = []
    for _, links in params:
        ents: dict = {}
        for blk, r, c, coef in links:
            _place(m, blk, r, c, coef, ents)
        mats.append(ExactMatrix.from_entries(size, size, {k: v for k, v in ents.items() if v}, field))
    names = tuple(p for p, _ in params)
    return TangentBasis(size, tuple(mats), names, names)


def basis_solAn2(n: int, field: Field = Q) -> TangentBasis:
    """Closed-form basis of ``{X : X^t A_n^2 + A_n^2 X = 0}`` as ``n x n`` matrices."""
    B = basis_solAn2_padded(n, field)
    if n % 2 == 0:
        return TangentBasis(n, B.basis, B.labels, B.param_names)
    return TangentBasis(n, tuple(strip(M) for M in B.basis), B.labels, B.param_names)
