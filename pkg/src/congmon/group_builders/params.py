"""Parameter records for elements of Sol_{A_n} and Sol_{A_n^2}.

Block indices in this package are 1-based and refer to the block grid of the
family matrix: 1x1 blocks for A_n, 2x2 blocks for A_n^2 (odd ``n`` is padded
with a leading zero row and column first).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Any

from ..errors import ParseError, PreconditionError
from ..exact_core import ExactMatrix, Field, Q, Scalar, field_from_tag
from ..lie_structure.families import (
    AN2_FAMILIES,
    AN2_MOD0,
    AN2_MOD1,
    AN2_MOD2,
    AN2_MOD3,
    AN_EVEN,
    AN_FAMILIES,
    AN_ODD,
    check_family,
)

EVEN_TYPE = (AN_EVEN, AN2_MOD0)
ODD_TYPE = (AN_ODD, AN2_MOD2)
PADDED = (AN2_MOD1, AN2_MOD3)


def block_size(family: str) -> int:
    return 1 if family in AN_FAMILIES else 2


def num_blocks(family: str, n: int) -> int:
    if family in AN_FAMILIES:
        return n
    return (n + 1) // 2 if family in PADDED else n // 2


def nil_count(family: str, n: int) -> int:
    m = num_blocks(family, n)
    if family in ODD_TYPE:
        return (m - 1) // 2
    if family in EVEN_TYPE:
        return (m - 2) // 2
    return m - 2


def nil_mask(family: str, d: int) -> tuple[tuple[bool, bool], tuple[bool, bool]] | None:
    """Which entries of the 2x2 block ``x_d`` are free; ``None`` means all."""
    top = ((True, True), (False, False))
    bottom = ((False, False), (True, True))
    if family == AN2_MOD1:
        return bottom if d % 2 else top
    if family == AN2_MOD3:
        if d == 1:
            return ((True, True), (False, False))
        return top if d % 2 else bottom
    return None


def _rand(rng: random.Random, nonzero: bool = False) -> Scalar:
    from fractions import Fraction

    while True:
        v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if v or not nonzero:
            return v


@dataclass(frozen=True)
class GroupParams:
    """Coordinates of ``build_D(diag) @ build_N(nil)``.

    ``diag`` is ``(x0,)`` for A_n, ``(g,)`` with ``g`` a 2x2 matrix for mod 0
    and mod 2, and ``(beta, alpha, free)`` for mod 1 and mod 3.  ``nil`` holds
    ``x_1..x_K`` (scalars or 2x2 blocks).  ``lam`` is used by mod 3 only.
    """

    family: str
    n: int
    diag: tuple
    nil: tuple
    lam: Scalar = 0
    field: Field = dc_field(default=Q)

    def __post_init__(self) -> None:
        check_family(self.family, self.n)
        F = self.field
        fam = self.family
        if fam in AN_FAMILIES:
            diag = (F.coerce(self.diag[0]),) if len(self.diag) == 1 else None
            if diag is None or not diag[0]:
                raise PreconditionError("diag-part must be a single nonzero scalar")
        elif fam in (AN2_MOD0, AN2_MOD2):
            if len(self.diag) != 1:
                raise PreconditionError("diag-part must be one 2x2 block")
            g = _as_block(self.diag[0], F)
            if not (g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]):
                raise PreconditionError("diag-part g is singular")
            diag = (g,)
        else:
            if len(self.diag) != 3:
                raise PreconditionError("diag-part must be (beta, alpha, free)")
            diag = tuple(F.coerce(x) for x in self.diag)
            if not diag[0] or not diag[1]:
                raise PreconditionError("beta and alpha must be nonzero")
        object.__setattr__(self, "diag", diag)

        K = nil_count(fam, self.n)
        if len(self.nil) != K:
            raise PreconditionError(f"{fam} n={self.n} needs {K} nil parameters, got {len(self.nil)}")
        lam = F.coerce(self.lam)
        if fam != AN2_MOD3 and lam:
            raise PreconditionError("lam is only used by the mod 3 family")
        object.__setattr__(self, "lam", lam)
        if fam in AN_FAMILIES:
            nil = tuple(F.coerce(x) for x in self.nil)
        else:
            nil = tuple(_as_block(x, F) for x in self.nil)
            for d, x in enumerate(nil, start=1):
                _check_shape(fam, d, x, lam)
        object.__setattr__(self, "nil", nil)

    # constructors
    @classmethod
    def identity(cls, family: str, n: int, field: Field = Q) -> "GroupParams":
        return cls(family, n, _identity_diag(family, field), _zero_nil(family, n, field), 0, field)

    @classmethod
    def random(cls, family: str, n: int, rng: random.Random, field: Field = Q, lam: object | None = None,
               with_diag: bool = True) -> "GroupParams":
        diag = _random_diag(family, rng) if with_diag else _identity_diag(family, field)
        if family == AN2_MOD3:
            lam = _rand(rng) if lam is None else lam
        else:
            lam = 0
        nil = []
        for d in range(1, nil_count(family, n) + 1):
            if family in AN_FAMILIES:
                nil.append(_rand(rng))
                continue
            mask = nil_mask(family, d)
            rows = [[_rand(rng) if (mask is None or mask[i][j]) else 0 for j in range(2)] for i in range(2)]
            if family == AN2_MOD3 and d == 1:
                rows[1][0] = -field.coerce(lam)
            nil.append(ExactMatrix(rows, field))
        return cls(family, n, diag, tuple(nil), lam, field)

    def with_diag(self, diag: tuple) -> "GroupParams":
        return GroupParams(self.family, self.n, diag, self.nil, self.lam, self.field)

    def with_nil(self, nil: tuple, lam: object = 0) -> "GroupParams":
        return GroupParams(self.family, self.n, self.diag, nil, lam, self.field)

    def diag_only(self) -> "GroupParams":
        return GroupParams(self.family, self.n, self.diag, _zero_nil(self.family, self.n, self.field), 0, self.field)

    def nil_only(self) -> "GroupParams":
        return GroupParams(self.family, self.n, _identity_diag(self.family, self.field), self.nil, self.lam, self.field)

    # serialization
    def to_json(self) -> dict[str, Any]:
        F = self.field

        def enc(x: object) -> Any:
            return x.tolist() if isinstance(x, ExactMatrix) else F.format(x)

        return {
            "family": self.family,
            "n": self.n,
            "field": F.tag,
            "diag": [enc(x) for x in self.diag],
            "nil": [enc(x) for x in self.nil],
            "lam": F.format(self.lam),
        }

    @classmethod
    def from_json(cls, obj: Any) -> "GroupParams":
        if not isinstance(obj, dict):
            raise ParseError("GroupParams JSON must be an object")
        try:
            F = field_from_tag(obj.get("field", "q"))
            fam, n = obj["family"], obj["n"]
            diag = [_dec(x, F) for x in obj["diag"]]
            nil = [_dec(x, F) for x in obj["nil"]]
            lam = F.parse(obj.get("lam", "0"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad GroupParams JSON: {exc}") from exc
        if not isinstance(n, int):
            raise ParseError("n must be an integer")
        return cls(fam, n, tuple(diag), tuple(nil), lam, F)


def _dec(x: Any, F: Field) -> object:
    if isinstance(x, list):
        return ExactMatrix([[F.parse(v) for v in row] for row in x], F)
    return F.parse(x)


def _as_block(x: object, F: Field) -> ExactMatrix:
    if isinstance(x, ExactMatrix):
        if x.shape != (2, 2):
            raise PreconditionError("blocks must be 2x2")
        F.require_same(x.field)
        return x
    try:
        M = ExactMatrix(x, F)  # type: ignore[arg-type]
    except TypeError as exc:
        raise PreconditionError(f"expected a 2x2 block, got {x!r}") from exc
    if M.shape != (2, 2):
        raise PreconditionError("blocks must be 2x2")
    return M


def _check_shape(family: str, d: int, x: ExactMatrix, lam: Scalar) -> None:
    mask = nil_mask(family, d)
    if mask is None:
        return
    for i in range(2):
        for j in range(2):
            if family == AN2_MOD3 and d == 1 and (i, j) == (1, 0):
                if x[1, 0] != -lam:
                    raise PreconditionError("mod 3 block x_1 must have entry (2,1) equal to -lam")
                continue
            if not mask[i][j] and x[i, j]:
                raise PreconditionError(f"block x_{d} violates the {family} shape constraint")


def _identity_diag(family: str, field: Field) -> tuple:
    if family in AN_FAMILIES:
        return (field.one,)
    if family in (AN2_MOD0, AN2_MOD2):
        return (ExactMatrix.identity(2, field),)
    return (field.one, field.one, field.zero)


def _zero_nil(family: str, n: int, field: Field) -> tuple:
    K = nil_count(family, n)
    if family in AN_FAMILIES:
        return (field.zero,) * K
    return (ExactMatrix.zeros(2, 2, field),) * K


def _random_diag(family: str, rng: random.Random) -> tuple:
    if family in AN_FAMILIES:
        return (_rand(rng, nonzero=True),)
    if family in AN2_FAMILIES and family not in PADDED:
        while True:
            g = [[_rand(rng) for _ in range(2)] for _ in range(2)]
            if g[0][0] * g[1][1] - g[0][1] * g[1][0]:
                return (g,)
    return (_rand(rng, nonzero=True), _rand(rng, nonzero=True), _rand(rng))
