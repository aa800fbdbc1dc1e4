"""Labeled generators of ``sol_{A_n}`` and ``sol_{A_n^2}`` from their index-sum formulas."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError, VerificationError
from ..exact_core import ExactMatrix, Field, Q, is_tangent
from .families import (
    AN2_MOD0,
    AN2_MOD1,
    AN2_MOD2,
    AN2_MOD3,
    AN_ODD,
    an2_family,
    an_family,
    family_matrix,
)


@dataclass(frozen=True)
class GeneratorSet:
    family: str
    n: int
    labels: tuple[str, ...]
    matrices: tuple[ExactMatrix, ...]

    def __getitem__(self, label: str) -> ExactMatrix:
        return self.matrices[self.labels.index(label)]

    def __len__(self) -> int:
        return len(self.labels)

    def as_dict(self) -> dict[str, ExactMatrix]:
        return dict(zip(self.labels, self.matrices))

    def verify(self) -> bool:
        A = family_matrix(self.family, self.n, self.matrices[0].field)
        return all(is_tangent(M, A) for M in self.matrices)


def _sum_E(n: int, terms, field: Field) -> ExactMatrix:
    """Sum of ``coef * E_{ij}`` (1-based); terms outside the ``n x n`` range are dropped."""
    ents: dict = {}
    for coef, i, j in terms:
        if 1 <= i <= n and 1 <= j <= n:
            ents[(i - 1, j - 1)] = ents.get((i - 1, j - 1), 0) + coef
    return ExactMatrix.from_entries(n, n, {k: v for k, v in ents.items() if v}, field)


def _checked(family: str, n: int, labels, mats) -> GeneratorSet:
    G = GeneratorSet(family, n, tuple(labels), tuple(mats))
    if not G.verify():
        raise VerificationError(f"{family} generator outside the tangent space at n = {n}")
    return G


def generators_solAn(n: int, field: Field = Q) -> GeneratorSet:
    """``h`` and ``e_1, ..., e_K`` with ``K = (n-1)/2`` (odd) or ``(n-2)/2`` (even)."""
    fam = an_family(n)
    labels = ["h"]
    mats = [_sum_E(n, [((-1) ** (i + 1), i, i) for i in range(1, n + 1)], field)]
    odd = fam == AN_ODD
    kmax = (n - 1) // 2 if odd else (n - 2) // 2
    for k in range(1, kmax + 1):
        terms = []
        for l in range(1, n + 1):
            if odd:
                terms += [(1, 2 * l - 1, 2 * k + 2 * l - 2), (-1, 2 * k + 2 * l - 1, 2 * l)]
            else:
                terms += [(1, 2 * l - 1, 2 * k + 2 * l - 1), (-1, 2 * k + 2 * l, 2 * l)]
        labels.append(f"e{k}")
        mats.append(_sum_E(n, terms, field))
    return _checked(fam, n, labels, mats)


# (p, q, s, t): the generator is sum_l E_{p+4l, q+4l+4k} - E_{s+4l+4k, t+4l}
_NIL_PATTERNS = {
    AN2_MOD0: {"a": (1, 1, 3, 3), "b": (1, 2, 4, 3), "c": (2, 1, 3, 4), "d": (2, 2, 4, 4)},
    AN2_MOD2: {"a": (1, -1, 1, 3), "b": (1, 0, 2, 3), "c": (2, -1, 1, 4), "d": (2, 0, 2, 4)},
    AN2_MOD1: {"a": (1, 2, 4, 3), "b": (1, 3, 5, 3), "c": (2, 2, 4, 4), "d": (2, 3, 5, 4)},
    AN2_MOD3: {"a": (1, 0, 2, 3), "b": (1, 1, 3, 3), "c": (2, 0, 2, 4), "d": (2, 1, 3, 4)},
}
# (p, q, s, t): sum_l E_{p+4l, q+4l} - E_{s+4l, t+4l}
_LEVEL_PATTERNS = {
    AN2_MOD0: {"e": (1, 2, 4, 3), "f": (2, 1, 3, 4)},
    AN2_MOD2: {"e": (1, 2, 4, 3), "f": (2, 1, 3, 4)},
    AN2_MOD1: {"e": (1, 2, 4, 3), "f": (1, 3, 5, 3), "g": (2, 3, 5, 4)},
    AN2_MOD3: {"e": (2, 1, 3, 4), "f": (2, 3, 5, 4)},
}


def an2_kmax(n: int) -> int:
    fam = an2_family(n)
    return {AN2_MOD0: (n - 4) // 4, AN2_MOD2: (n - 2) // 4, AN2_MOD1: (n - 5) // 4, AN2_MOD3: (n - 3) // 4}[fam]


def generators_solAn2(n: int, field: Field = Q) -> GeneratorSet:
    """``h1, h2, e, f, [g], a_k, b_k, c_k, d_k`` as ``n x n`` matrices.

    The sums run over every ``l >= 0`` and terms falling outside the matrix are dropped.
    """
    fam = an2_family(n)
    L = range(0, n // 4 + 2)
    labels = ["h1", "h2"]
    mats = [
        _sum_E(n, [t for l in L for t in ((1, 1 + 4 * l, 1 + 4 * l), (-1, 3 + 4 * l, 3 + 4 * l))], field),
        _sum_E(n, [t for l in L for t in ((1, 2 + 4 * l, 2 + 4 * l), (-1, 4 + 4 * l, 4 + 4 * l))], field),
    ]
    for name, (p, q, s, t) in _LEVEL_PATTERNS[fam].items():
        labels.append(name)
        mats.append(_sum_E(n, [x for l in L for x in ((1, p + 4 * l, q + 4 * l), (-1, s + 4 * l, t + 4 * l))], field))
    for k in range(1, an2_kmax(n) + 1):
        for name, (p, q, s, t) in _NIL_PATTERNS[fam].items():
            terms = [x for l in L for x in ((1, p + 4 * l, q + 4 * l + 4 * k), (-1, s + 4 * l + 4 * k, t + 4 * l))]
            labels.append(f"{name}{k}")
            mats.append(_sum_E(n, terms, field))
    for lbl, M in zip(labels, mats):
        if M.is_zero():
            raise VerificationError(f"generator {lbl} vanished at n = {n}")
    return _checked(fam, n, labels, mats)


def generators(kind: str, n: int, field: Field = Q) -> GeneratorSet:
    if kind == "an":
        return generators_solAn(n, field)
    if kind == "an2":
        return generators_solAn2(n, field)
    raise PreconditionError(f"unknown family kind {kind!r}")
