"""Exact elimination, kernels and the generic tangent-equation solver.

Elimination runs on sparse row dictionaries; every pivot row is normalized
before it is used, so rational entries stay in lowest terms throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from ..errors import FieldMismatchError, PreconditionError, VerificationError
from .fields import Field, Scalar
from .matrix import ExactMatrix, is_tangent

SparseRow = dict


def _sparse_rref(rows: list[SparseRow], ncols: int, field: Field, stop_col: int | None = None):
    """Gauss-Jordan in place on sparse rows; returns pivot columns.

    Pivots are searched only in columns ``< stop_col`` when given.
    """
    limit = ncols if stop_col is None else stop_col
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if c in rows[i]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = field.one / prow[c]
        if prow[c] != field.one:
            for j in prow:
                prow[j] = prow[j] * inv
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row.get(c)
            if f is None:
                continue
            for j, v in prow.items():
                nv = row.get(j, field.zero) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        pivots.append(c)
        r += 1
    return pivots


def _to_sparse(M: ExactMatrix) -> list[SparseRow]:
    return [{j: x for j, x in enumerate(r) if x} for r in M.rows]


def _from_sparse(rows: list[SparseRow], ncols: int, field: Field) -> ExactMatrix:
    z = field.zero
    out = []
    for row in rows:
        dense = [z] * ncols
        for j, v in row.items():
            dense[j] = v
        out.append(tuple(dense))
    return ExactMatrix(tuple(out), field, _trusted=True, ncols=ncols)


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    if M.nrows == 0 or M.ncols == 0:
        raise PreconditionError("rref of an empty matrix")
    rows = _to_sparse(M)
    pivots = _sparse_rref(rows, M.ncols, M.field)
    return _from_sparse(rows, M.ncols, M.field), pivots, len(pivots)


def rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    rows = _to_sparse(M)
    return len(_sparse_rref(rows, M.ncols, M.field))


def _kernel_from_rows(rows: list[SparseRow], ncols: int, field: Field) -> list[tuple[int, list[Scalar]]]:
    """Kernel basis as ``(free column, vector)`` pairs."""
    pivots = _sparse_rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for k, pc in enumerate(pivots):
            x = rows[k].get(f)
            if x:
                v[pc] = -x
        basis.append((f, v))
    return basis


def kernel(M: ExactMatrix) -> list[ExactMatrix]:
    """Column-vector basis of ``{v : M v = 0}``; each vector is checked."""
    if M.ncols == 0:
        return []
    if M.nrows == 0:
        return [ExactMatrix.column(
            [M.field.one if i == j else M.field.zero for i in range(M.ncols)], M.field)
            for j in range(M.ncols)]
    vecs = _kernel_from_rows(_to_sparse(M), M.ncols, M.field)
    out = []
    for _, v in vecs:
        col = ExactMatrix(tuple((x,) for x in v), M.field, _trusted=True)
        if not (M @ col).is_zero():
            raise VerificationError("kernel vector failed M v = 0")
        out.append(col)
    return out


def kernel_intersection(A: ExactMatrix, B: ExactMatrix) -> list[ExactMatrix]:
    """Basis of ``ker A ∩ ker B`` via the kernel of the stacked matrix."""
    if A.field != B.field:
        raise FieldMismatchError("kernel_intersection over different fields")
    if A.ncols != B.ncols:
        raise PreconditionError(f"column counts differ: {A.ncols} vs {B.ncols}")
    stacked = ExactMatrix(A.rows + B.rows, A.field, _trusted=True, ncols=A.ncols)
    return kernel(stacked)


def determinant(M: ExactMatrix) -> Scalar:
    if not M.is_square():
        raise PreconditionError("determinant of a non-square matrix")
    field = M.field
    n = M.nrows
    a = [list(r) for r in M.rows]
    det = field.one
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return field.zero
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        inv = field.one / piv
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                f = f * inv
                row_c = a[c]
                row_i = a[i]
                for j in range(c, n):
                    if row_c[j]:
                        row_i[j] = row_i[j] - f * row_c[j]
    return det


def inverse(M: ExactMatrix) -> ExactMatrix:
    if not M.is_square():
        raise PreconditionError("inverse of a non-square matrix")
    n = M.nrows
    field = M.field
    rows = [{j: x for j, x in enumerate(r) if x} for r in M.rows]
    for i, row in enumerate(rows):
        row[n + i] = field.one
    pivots = _sparse_rref(rows, 2 * n, field, stop_col=n)
    if len(pivots) < n:
        raise PreconditionError("matrix is singular")
    z = field.zero
    out = []
    for row in rows:
        dense = [z] * n
        for j, v in row.items():
            if j >= n:
                dense[j - n] = v
        out.append(tuple(dense))
    return ExactMatrix(tuple(out), field, _trusted=True)


@dataclass(frozen=True)
class TangentBasis:
    """A labeled basis of ``{X : X^t A + A X = 0}``."""

    n: int
    basis: tuple[ExactMatrix, ...]
    labels: tuple[str, ...]
    param_names: tuple[str, ...] = dc_field(default=())

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.basis):
            raise PreconditionError("one label per basis matrix")
        if any(b.shape != (self.n, self.n) for b in self.basis):
            raise PreconditionError("basis matrices must be n x n")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def verify(self, A: ExactMatrix) -> bool:
        """Every basis matrix solves the tangent equation and the set is independent."""
        return all(is_tangent(B, A) for B in self.basis) and (
            not self.basis or rank(_stack_vecs(self.basis)) == len(self.basis)
        )

    def element(self, coeffs: Sequence[object]) -> ExactMatrix:
        """The linear combination ``sum c_k B_k``."""
        return linear_combination(self.basis, coeffs)


def linear_combination(mats: Sequence[ExactMatrix], coeffs: Sequence[object]) -> ExactMatrix:
    if len(mats) != len(coeffs):
        raise PreconditionError("one coefficient per matrix")
    if not mats:
        raise PreconditionError("empty combination")
    out = ExactMatrix.zeros(mats[0].nrows, mats[0].ncols, mats[0].field)
    for c, M in zip(coeffs, mats):
        if c:
            out = out + M.scale(c)
    return out


def _stack_vecs(mats: Iterable[ExactMatrix]) -> ExactMatrix:
    mats = list(mats)
    field = mats[0].field
    return ExactMatrix(tuple(tuple(M.vec()) for M in mats), field, _trusted=True)


def tangent_system(A: ExactMatrix) -> list[SparseRow]:
    """Sparse rows of the ``n^2`` equations in the unknowns ``X[k, l]`` (index ``k*n + l``)."""
    n = A.nrows
    field = A.field
    rows = []
    nz_by_row = [[(k, x) for k, x in enumerate(A.rows[i]) if x] for i in range(n)]
    nz_by_col = [[(k, A.rows[k][j]) for k in range(n) if A.rows[k][j]] for j in range(n)]
    for i in range(n):
        for j in range(n):
            row: SparseRow = {}
            # sum_k X[k,i] A[k,j]
            for k, a in nz_by_col[j]:
                idx = k * n + i
                row[idx] = row.get(idx, field.zero) + a
            # sum_k A[i,k] X[k,j]
            for k, a in nz_by_row[i]:
                idx = k * n + j
                row[idx] = row.get(idx, field.zero) + a
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return rows


def solve_tangent(A: ExactMatrix) -> TangentBasis:
    """Ground-truth basis of ``{X : X^t A + A X = 0}`` by direct elimination."""
    if not A.is_square():
        raise PreconditionError("solve_tangent needs a square matrix")
    n = A.nrows
    field = A.field
    rows = tangent_system(A)
    N = n * n
    if rows:
        vecs = _kernel_from_rows(rows, N, field)
    else:
        vecs = [(j, [field.one if i == j else field.zero for i in range(N)]) for j in range(N)]
    basis = []
    params = []
    for free, v in vecs:
        M = ExactMatrix.from_vec(v, n, n, field)
        if not is_tangent(M, A):
            raise VerificationError("generic tangent solution failed verification")
        basis.append(M)
        params.append(f"X[{free // n + 1},{free % n + 1}]")
    labels = tuple(f"v{k + 1}" for k in range(len(basis)))
    return TangentBasis(n, tuple(basis), labels, tuple(params))


def row_space_rref(mats: Sequence[ExactMatrix]) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
    """Canonical (RREF) description of the span of vectorized matrices."""
    if not mats:
        return ()
    ncols = mats[0].nrows * mats[0].ncols
    rows = [{j: x for j, x in enumerate(M.vec()) if x} for M in mats]
    pivots = _sparse_rref(rows, ncols, mats[0].field)
    return tuple(tuple(sorted(rows[k].items())) for k in range(len(pivots)))


def _mats(B: "TangentBasis | Sequence[ExactMatrix]") -> list[ExactMatrix]:
    return list(B.basis) if isinstance(B, TangentBasis) else list(B)


def span_equal(B1: "TangentBasis | Sequence[ExactMatrix]", B2: "TangentBasis | Sequence[ExactMatrix]") -> bool:
    """True iff the two families span the same space of matrices."""
    m1, m2 = _mats(B1), _mats(B2)
    if not m1 or not m2:
        return not m1 and not m2 or all(M.is_zero() for M in m1 + m2)
    if m1[0].shape != m2[0].shape:
        raise PreconditionError("span_equal across different ambient sizes")
    if m1[0].field != m2[0].field:
        raise FieldMismatchError("span_equal across fields")
    return row_space_rref(m1) == row_space_rref(m2)


def span_dim(mats: Sequence[ExactMatrix]) -> int:
    return len(row_space_rref(list(mats)))


class SpanSolver:
    """Coordinates of matrices in the span of a fixed independent family."""

    def __init__(self, mats: Sequence[ExactMatrix]):
        mats = list(mats)
        if not mats:
            raise PreconditionError("SpanSolver needs at least one matrix")
        self.mats = mats
        self.field = mats[0].field
        self.shape = mats[0].shape
        d = len(mats)
        N = self.shape[0] * self.shape[1]
        rows = []
        for i, M in enumerate(mats):
            row = {j: x for j, x in enumerate(M.vec()) if x}
            row[N + i] = self.field.one
            rows.append(row)
        pivots = _sparse_rref(rows, N + d, self.field, stop_col=N)
        if len(pivots) < d:
            raise PreconditionError("SpanSolver family is linearly dependent")
        self._N = N
        self._pivots = pivots
        self._R = [{j: v for j, v in row.items() if j < N} for row in rows]
        self._E = [{j - N: v for j, v in row.items() if j >= N} for row in rows]

    def coordinates(self, M: ExactMatrix) -> list[Scalar] | None:
        """Coefficients ``c`` with ``M = sum c_i mats[i]``, or ``None`` if outside the span."""
        if M.shape != self.shape:
            raise PreconditionError("shape mismatch in SpanSolver")
        w = M.vec()
        z = self.field.zero
        u = [w[p] for p in self._pivots]
        recon = [z] * self._N
        for k, uk in enumerate(u):
            if uk:
                for j, v in self._R[k].items():
                    recon[j] = recon[j] + uk * v
        if recon != list(w):
            return None
        d = len(self.mats)
        c = [z] * d
        for k, uk in enumerate(u):
            if uk:
                for i, e in self._E[k].items():
                    c[i] = c[i] + uk * e
        return c

    def contains(self, M: ExactMatrix) -> bool:
        return self.coordinates(M) is not None
