"""Immutable dense matrices over one exact field."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import FieldMismatchError, PreconditionError
from .fields import Q, Field, GaussianRational, Scalar


class ExactMatrix:
    """A rectangular matrix with exact entries and a single field tag.

    Entries are stored row-major as a tuple of tuples and never mutated.
    Indices are 0-based in this API; 1-based helpers live in
    :func:`elementary`.
    """

    __slots__ = ("_rows", "nrows", "ncols", "field", "_hash")

    def __init__(
        self,
        rows: Iterable[Iterable[object]],
        field: Field = Q,
        *,
        _trusted: bool = False,
        ncols: int | None = None,
    ):
        if _trusted:
            data = tuple(rows)  # type: ignore[arg-type]
        else:
            data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        nrows = len(data)
        if nrows:
            ncols = len(data[0])
        elif ncols is None:
            ncols = 0
        if any(len(r) != ncols for r in data):
            raise PreconditionError("ragged rows")
        self._rows = data
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self._hash: int | None = None

    # construction helpers
    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, field: Field = Q) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return cls(tuple((z,) * ncols for _ in range(nrows)), field, _trusted=True, ncols=ncols)

    @classmethod
    def identity(cls, n: int, field: Field = Q) -> "ExactMatrix":
        z, o = field.zero, field.one
        return cls(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, _trusted=True)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: dict, field: Field = Q) -> "ExactMatrix":
        """Build from a sparse ``{(i, j): value}`` map (0-based)."""
        z = field.zero
        rows = [[z] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            rows[i][j] = field.coerce(v)
        return cls(tuple(tuple(r) for r in rows), field, _trusted=True)

    @classmethod
    def diag(cls, values: Sequence[object], field: Field = Q) -> "ExactMatrix":
        n = len(values)
        return cls.from_entries(n, n, {(i, i): v for i, v in enumerate(values)}, field)

    @classmethod
    def column(cls, values: Sequence[object], field: Field = Q) -> "ExactMatrix":
        return cls([[v] for v in values], field)

    @classmethod
    def from_vec(cls, vec: Sequence[Scalar], nrows: int, ncols: int, field: Field) -> "ExactMatrix":
        return cls(tuple(tuple(vec[i * ncols:(i + 1) * ncols]) for i in range(nrows)), field, _trusted=True)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self._rows)

    def vec(self) -> list[Scalar]:
        """Row-major vectorization."""
        return [x for r in self._rows for x in r]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        return ExactMatrix(tuple(r[c0:c1] for r in self._rows[r0:r1]), self.field, _trusted=True)

    def with_entry(self, i: int, j: int, value: object) -> "ExactMatrix":
        rows = [list(r) for r in self._rows]
        rows[i][j] = self.field.coerce(value)
        return ExactMatrix(tuple(tuple(r) for r in rows), self.field, _trusted=True)

    # arithmetic
    def _check(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"field {self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise PreconditionError(f"shape {self.shape} vs {other.shape}")
        return ExactMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.field,
            _trusted=True,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise PreconditionError(f"shape {self.shape} vs {other.shape}")
        return ExactMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.field,
            _trusted=True,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-a for a in r) for r in self._rows), self.field, _trusted=True)

    def scale(self, c: object) -> "ExactMatrix":
        c = self.field.coerce(c)
        return ExactMatrix(tuple(tuple(c * a for a in r) for r in self._rows), self.field, _trusted=True)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check(other)
        if self.ncols != other.nrows:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        orows = other._rows
        out = []
        for r in self._rows:
            acc = [z] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return ExactMatrix(tuple(out), self.field, _trusted=True)

    def __mul__(self, other: object) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other: object) -> "ExactMatrix":
        return self.scale(other)

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square() or k < 0:
            raise PreconditionError("power needs a square matrix and k >= 0")
        out = ExactMatrix.identity(self.nrows, self.field)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> "ExactMatrix":
        if not self.nrows or not self.ncols:
            return ExactMatrix.zeros(self.ncols, self.nrows, self.field)
        return ExactMatrix(tuple(zip(*self._rows)), self.field, _trusted=True)

    @property
    def H(self) -> "ExactMatrix":
        """Conjugate transpose (plain transpose outside Q(i))."""
        t = self.T
        if self.field.tag != "qi":
            return t
        return ExactMatrix(tuple(tuple(x.conjugate() for x in r) for r in t._rows), self.field, _trusted=True)

    def conj(self) -> "ExactMatrix":
        if self.field.tag != "qi":
            return self
        return ExactMatrix(tuple(tuple(x.conjugate() for x in r) for r in self._rows), self.field, _trusted=True)

    def trace(self) -> Scalar:
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self._rows[i][i]
        return acc

    def change_field(self, field: Field) -> "ExactMatrix":
        """Re-tag entries into ``field`` (only exact embeddings are accepted)."""
        return ExactMatrix(self._rows, field)

    # comparison
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.tag, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self._rows)
        return f"ExactMatrix[{self.field.tag}]({body})"

    def tolist(self) -> list[list[str]]:
        return [[self.field.format(x) for x in r] for r in self._rows]


def elementary(n: int, i: int, j: int, field: Field = Q, value: object = 1) -> ExactMatrix:
    """The 1-based unit matrix ``E_{ij}`` of size ``n`` (scaled by ``value``)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise PreconditionError(f"E_({i},{j}) outside size {n}")
    return ExactMatrix.from_entries(n, n, {(i - 1, j - 1): value}, field)


def block_matrix(blocks: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    """Assemble a block matrix; every block row shares heights, every block column widths."""
    field = blocks[0][0].field
    rows: list[tuple[Scalar, ...]] = []
    for brow in blocks:
        h = brow[0].nrows
        for b in brow:
            if b.field != field:
                raise FieldMismatchError("blocks over different fields")
            if b.nrows != h:
                raise PreconditionError("block heights differ within a row")
        for r in range(h):
            rows.append(tuple(x for b in brow for x in b.rows[r]))
    return ExactMatrix(tuple(rows), field)


def direct_sum(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    """Block-diagonal matrix of the inputs."""
    if not mats:
        raise PreconditionError("direct sum of an empty list")
    field = mats[0].field
    n = sum(m.nrows for m in mats)
    c = sum(m.ncols for m in mats)
    entries = {}
    r0 = c0 = 0
    for m in mats:
        if m.field != field:
            raise FieldMismatchError("direct sum over different fields")
        for i, row in enumerate(m.rows):
            for j, x in enumerate(row):
                if x:
                    entries[(r0 + i, c0 + j)] = x
        r0 += m.nrows
        c0 += m.ncols
    return ExactMatrix.from_entries(n, c, entries, field)


def congruent_transform(P: ExactMatrix, A: ExactMatrix) -> ExactMatrix:
    """``P^t A P``."""
    return P.T @ A @ P


def commutator(X: ExactMatrix, Y: ExactMatrix) -> ExactMatrix:
    return X @ Y - Y @ X


def is_solution(X: ExactMatrix, A: ExactMatrix) -> bool:
    """``X^t A X == A``."""
    return X.T @ A @ X == A


def is_tangent(X: ExactMatrix, A: ExactMatrix) -> bool:
    """``X^t A + A X == 0``."""
    return (X.T @ A + A @ X).is_zero()


__all__ = [
    "ExactMatrix",
    "GaussianRational",
    "Fraction",
    "elementary",
    "block_matrix",
    "direct_sum",
    "congruent_transform",
    "commutator",
    "is_solution",
    "is_tangent",
]
