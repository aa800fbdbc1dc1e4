"""Kernel-intersection criteria and constructive non-invertible solutions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import PreconditionError, VerificationError
from ..exact_core import QI, ExactMatrix, Q, determinant, kernel_intersection, serialize

COMPLEX = "complex-criterion"
STAR = "star-criterion"
JORDAN_CHEVALLEY = "jordan-chevalley"
DIRECT_SUM = "direct-sum"
BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class GroupVerdict:
    is_group: bool
    kernel_intersection_dim: int
    witness: ExactMatrix | None
    method: str

    def __post_init__(self) -> None:
        if self.witness is not None and determinant(self.witness):
            raise VerificationError("witness is invertible")
        if self.method == COMPLEX and self.is_group != (self.kernel_intersection_dim == 0):
            raise VerificationError("verdict disagrees with the kernel intersection")

    def to_json(self) -> dict:
        out = {
            "is_group": self.is_group,
            "kernel_intersection_dim": self.kernel_intersection_dim,
            "method": self.method,
        }
        if self.witness is not None:
            out["witness"] = serialize.matrix_to_json(self.witness)
        return out


def _square(A: ExactMatrix) -> None:
    if not A.is_square():
        raise PreconditionError("expected a square matrix")


def _to_qi(A: ExactMatrix) -> ExactMatrix:
    """Rational input is embedded in Q(i); other fields are rejected."""
    if A.field == QI:
        return A
    if A.field == Q:
        return A.change_field(QI)
    raise PreconditionError(f"expected a matrix over qi (or q), got {A.field.tag}")


def _first_nonzero(v: ExactMatrix) -> int:
    for j in range(v.nrows):
        if v[j, 0]:
            return j
    raise PreconditionError("zero vector")


def build_singular_solution(A: ExactMatrix) -> ExactMatrix:
    """A singular ``X`` with ``X^t A X = A`` built from ``v`` in ``ker A  and  ker A^t``.

    If ``v^t v != 0`` the witness is ``I - vv^t/(v^t v)``. Otherwise it is the rank-one
    projector ``I - v e_j^t / v_j`` with ``j`` the first nonzero coordinate of ``v``. Both kill
    ``v``, and both leave ``A`` fixed because ``Av = 0`` and ``v^t A = 0``.
    """
    _square(A)
    vs = kernel_intersection(A, A.T)
    if not vs:
        raise PreconditionError("ker A and ker A^t intersect trivially")
    v = vs[0]
    n = A.nrows
    fld = A.field
    I = ExactMatrix.identity(n, fld)
    vtv = (v.T @ v)[0, 0]
    if vtv:
        X = I - (v @ v.T).scale(fld.one / vtv)
    else:
        j = _first_nonzero(v)
        ej = ExactMatrix.from_entries(n, 1, {(j, 0): 1}, fld)
        X = I - (v @ ej.T).scale(fld.one / v[j, 0])
    if X.T @ A @ X != A or determinant(X):
        raise VerificationError("singular witness failed verification")
    return X


def build_star_witness(A: ExactMatrix) -> ExactMatrix:
    """``X = t vv* - I`` with ``t = 1/(v*v)`` for ``v`` in ``ker A  and  ker A*``; ``X* A X = A``."""
    A = _to_qi(A)
    vs = kernel_intersection(A, A.H)
    if not vs:
        raise PreconditionError("ker A and ker A* intersect trivially")
    v = vs[0]
    t = QI.one / (v.H @ v)[0, 0]
    X = (v @ v.H).scale(t) - ExactMatrix.identity(A.nrows, QI)
    if X.H @ A @ X != A or determinant(X):
        raise VerificationError("star witness failed verification")
    return X


def is_group_complex(A: ExactMatrix) -> GroupVerdict:
    """``Sol_A`` is a group iff ``ker A  and  ker A^t`` meet only in 0."""
    _square(A)
    A = _to_qi(A)
    d = len(kernel_intersection(A, A.T))
    witness = build_singular_solution(A) if d else None
    return GroupVerdict(d == 0, d, witness, COMPLEX)


def is_group_star(A: ExactMatrix) -> GroupVerdict:
    """``{X : X* A X = A}`` is a group iff ``ker A  and  ker A*`` meet only in 0."""
    _square(A)
    A = _to_qi(A)
    d = len(kernel_intersection(A, A.H))
    witness = build_star_witness(A) if d else None
    return GroupVerdict(d == 0, d, witness, STAR)


def pencil_completely_singular(A: ExactMatrix, B: ExactMatrix) -> bool:
    """Some nonzero ``v`` has ``Av = Bv = 0``."""
    if A.shape != B.shape:
        raise PreconditionError("pencil matrices must have the same shape")
    return bool(kernel_intersection(A, B))


def necessary_condition_anyfield(A: ExactMatrix) -> bool:
    """``v^t w = 0`` for all ``v, w`` in ``ker A  and  ker A^t`` (so every ``vv^t`` is nilpotent)."""
    _square(A)
    if A.field.characteristic == 2:
        raise PreconditionError("characteristic 2 is not supported")
    vs = kernel_intersection(A, A.T)
    return all(not (v.T @ w)[0, 0] for v in vs for w in vs)


def _check_jc_nil(N: ExactMatrix) -> None:
    n = N.nrows
    if not N.is_square():
        raise PreconditionError("A_nil must be square")
    rows_used, cols_used = set(), set()
    for i in range(n):
        for j in range(n):
            x = N[i, j]
            if not x:
                continue
            if j <= i or x != N.field.one:
                raise PreconditionError("A_nil must be strictly upper triangular with 0/1 entries")
            if i in rows_used or j in cols_used:
                raise PreconditionError("A_nil has two ones in one row or column")
            rows_used.add(i)
            cols_used.add(j)


def is_group_jordan_chevalley(A_d: ExactMatrix, A_nil: ExactMatrix) -> GroupVerdict:
    """Group iff ``ker A_d, ker A_nil, ker A_nil^t`` meet only in 0."""
    _square(A_d)
    if A_d.shape != A_nil.shape:
        raise PreconditionError("A_d and A_nil must have the same shape")
    n = A_d.nrows
    if any(A_d[i, j] for i in range(n) for j in range(n) if i != j):
        raise PreconditionError("A_d must be diagonal")
    _check_jc_nil(A_nil)
    stacked = ExactMatrix(A_d.rows + A_nil.rows, A_d.field)
    d = len(kernel_intersection(stacked, A_nil.T))
    witness = None
    if d:
        A = A_d + A_nil
        if kernel_intersection(A, A.T):
            witness = build_singular_solution(A.change_field(QI) if A.field == Q else A)
    return GroupVerdict(d == 0, d, witness, JORDAN_CHEVALLEY)


def is_group_direct_sum(blocks) -> bool:
    """False iff the 1x1 zero block is a summand."""
    blocks = list(blocks)
    if not blocks:
        raise PreconditionError("empty block list")
    return not any(b.kind == "A_odd" and b.size == 1 for b in blocks)


def brute_force_monoid(A: ExactMatrix, limit: int = 10**7) -> tuple[int, int, bool]:
    """Count solutions of ``X^t A X = A`` over F_p and the invertible ones among them."""
    p = A.field.characteristic
    if not p:
        raise PreconditionError("brute force needs a matrix over F_p")
    _square(A)
    n = A.nrows
    if n > 3 or p ** (n * n) > limit:
        raise PreconditionError(f"search space {p}^{n * n} is too large")
    a = [[A[i, j].v for j in range(n)] for i in range(n)]
    sols = inv = 0
    for flat in product(range(p), repeat=n * n):
        X = [flat[i * n:(i + 1) * n] for i in range(n)]
        AX = [[sum(a[i][k] * X[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]
        ok = all(
            sum(X[k][i] * AX[k][j] for k in range(n)) % p == a[i][j] for i in range(n) for j in range(n)
        )
        if not ok:
            continue
        sols += 1
        if _det_mod(X, p):
            inv += 1
    return sols, inv, sols == inv


def _det_mod(X, p: int) -> int:
    n = len(X)
    if n == 1:
        return X[0][0] % p
    if n == 2:
        return (X[0][0] * X[1][1] - X[0][1] * X[1][0]) % p
    return (
        X[0][0] * (X[1][1] * X[2][2] - X[1][2] * X[2][1])
        - X[0][1] * (X[1][0] * X[2][2] - X[1][2] * X[2][0])
        + X[0][2] * (X[1][0] * X[2][1] - X[1][1] * X[2][0])
    ) % p
