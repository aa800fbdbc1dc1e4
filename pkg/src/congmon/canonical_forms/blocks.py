"""The six canonical block templates for matrix congruence, built from index rules."""

from __future__ import annotations

from dataclasses import dataclass
from ..errors import PreconditionError
from ..exact_core import ExactMatrix, Field, Q, block_matrix, direct_sum

BLOCK_KINDS = ("A_odd", "B_even", "C_odd", "D_even", "E_even", "F_even")
_ALIASES = {"a": "A_odd", "b": "B_even", "c": "C_odd", "d": "D_even", "e": "E_even", "f": "F_even"}


@dataclass(frozen=True)
class CanonicalBlock:
    kind: str
    size: int
    c: object = None

    def __post_init__(self) -> None:
        kind = _ALIASES.get(self.kind.lower(), self.kind) if isinstance(self.kind, str) else self.kind
        object.__setattr__(self, "kind", kind)
        if kind not in BLOCK_KINDS:
            raise PreconditionError(f"unknown block kind {self.kind!r}")
        n = self.size
        if not isinstance(n, int) or n < 1:
            raise PreconditionError("block size must be a positive integer")
        odd = kind in ("A_odd", "C_odd")
        if odd and n % 2 == 0:
            raise PreconditionError(f"{kind} needs an odd size")
        if not odd and n % 2:
            raise PreconditionError(f"{kind} needs an even size")
        if kind == "B_even":
            if self.c is None:
                raise PreconditionError("B_even needs the parameter c")
            if self.c == 1 or self.c == -1:
                raise PreconditionError("B_even needs c != +-1")
        elif self.c is not None:
            raise PreconditionError(f"{kind} takes no parameter")
        if kind == "D_even" and (n // 2) % 2:
            raise PreconditionError("D_even needs size 2k with k even")
        if kind == "F_even" and (n // 2) % 2 == 0:
            raise PreconditionError("F_even needs size 2k with k odd")


def make_J(c: object, k: int, field: Field = Q) -> ExactMatrix:
    """Ones on the anti-diagonal, ``c`` just right of it (rows 2..k)."""
    ents = {}
    for i in range(k):
        ents[(i, k - 1 - i)] = 1
        if i >= 1:
            ents[(i, k - i)] = c
    return ExactMatrix.from_entries(k, k, ents, field)


def make_I(c: object, k: int, field: Field = Q) -> ExactMatrix:
    """``c`` on the anti-diagonal, ones just right of it (rows 2..k)."""
    ents = {}
    for i in range(k):
        ents[(i, k - 1 - i)] = c
        if i >= 1:
            ents[(i, k - i)] = 1
    return ExactMatrix.from_entries(k, k, ents, field)


def _anti(n: int, anti, right, field: Field) -> ExactMatrix:
    """``anti(i)`` on ``(i, n-1-i)`` and ``right(i)`` on ``(i, n-i)`` for ``i >= 1`` (0-based)."""
    ents = {}
    for i in range(n):
        ents[(i, n - 1 - i)] = anti(i)
        if i >= 1:
            ents[(i, n - i)] = right(i)
    return ExactMatrix.from_entries(n, n, ents, field)


def make_block(b: CanonicalBlock, field: Field = Q) -> ExactMatrix:
    n = b.size
    kind = b.kind
    if kind == "A_odd":
        k = n // 2
        if k == 0:
            return ExactMatrix.zeros(1, 1, field)
        ents = {(i, k + 1 + i): 1 for i in range(k)}
        ents.update({(k + 1 + i, i + 1): 1 for i in range(k)})
        return ExactMatrix.from_entries(n, n, ents, field)
    if kind == "C_odd":
        k = n // 2
        # rows 2..k+1 carry +1 right of the anti-diagonal, rows k+2..2k+1 carry -1
        return _anti(n, lambda i: 1, lambda i: 1 if i <= k else -1, field)
    if kind == "E_even":
        k = n // 2
        return _anti(n, lambda i: 1 if i < k else -1, lambda i: 1, field)
    k = n // 2
    Z = ExactMatrix.zeros(k, k, field)
    if kind == "B_even":
        c = field.coerce(b.c) if not isinstance(b.c, str) else field.parse(b.c)
        return block_matrix([[Z, make_J(c, k, field)], [make_I(c, k, field), Z]])
    if kind == "D_even":
        return block_matrix([[Z, make_J(1, k, field)], [make_J(-1, k, field), Z]])
    return block_matrix([[Z, make_I(1, k, field)], [make_I(-1, k, field), Z]])


def assemble(blocks, field: Field = Q) -> ExactMatrix:
    """Direct sum of canonical blocks."""
    blocks = list(blocks)
    if not blocks:
        raise PreconditionError("empty block list")
    return direct_sum([make_block(b, field) for b in blocks])


__all__ = ["BLOCK_KINDS", "CanonicalBlock", "assemble", "make_I", "make_J", "make_block"]
