"""Explicit D and N elements, products, inverses and the D x N factorization.

Every public constructor checks ``X^t A X = A`` exactly before returning.
"""

from __future__ import annotations

from ..errors import PreconditionError, VerificationError
from ..exact_core import ExactMatrix, Field, block_matrix, determinant, inverse, is_solution
from ..lie_structure.families import (
    AN2_MOD0,
    AN2_MOD1,
    AN2_MOD2,
    AN2_MOD3,
    AN_FAMILIES,
    check_family,
    family_matrix,
    pad_for_blocks,
    strip,
)
from .params import EVEN_TYPE, ODD_TYPE, PADDED, GroupParams, block_size, nil_count, num_blocks
from .star import _blocks, star_blocks

A_BLOCK = ((0, 0), (0, 1))


def _family_matrix(family: str, n: int, field: Field) -> ExactMatrix:
    A = family_matrix(family, n, field)
    return pad_for_blocks(A) if family in PADDED else A


def _unpad(family: str, M: ExactMatrix) -> ExactMatrix:
    return strip(M) if family in PADDED else M


def _verified(family: str, n: int, Xp: ExactMatrix, what: str) -> ExactMatrix:
    """Check membership in (padded) block coordinates and stripped coordinates."""
    A = _family_matrix(family, n, Xp.field)
    if not is_solution(Xp, A):
        raise VerificationError(f"{what} for {family} n={n} fails X^t A X = A")
    X = _unpad(family, Xp)
    if family in PADDED and not is_solution(X, family_matrix(family, n, Xp.field)):
        raise VerificationError(f"{what} for {family} n={n} fails after stripping")
    return X


def _assemble(grid: list[list[ExactMatrix | None]], b: int, field: Field) -> ExactMatrix:
    zero = ExactMatrix.zeros(b, b, field)
    return block_matrix([[blk if blk is not None else zero for blk in row] for row in grid])


# ---------------------------------------------------------------- D
def _diag_blocks(p: GroupParams) -> list[ExactMatrix]:
    F, fam, m = p.field, p.family, num_blocks(p.family, p.n)
    if fam in AN_FAMILIES:
        x0 = p.diag[0]
        return [ExactMatrix([[x0 if k % 2 == 0 else 1 / x0]], F) for k in range(m)]
    if fam in (AN2_MOD0, AN2_MOD2):
        g = p.diag[0]
        ginvT = inverse(g).T
        return [g if k % 2 == 0 else ginvT for k in range(m)]
    beta, alpha, free = p.diag
    g0 = ExactMatrix([[0, 0], [0, beta]], F)
    g1 = ExactMatrix([[alpha, free], [0, 1 / beta]], F)
    g1invT = inverse(g1).T
    a = ExactMatrix(A_BLOCK, F)
    if g0.T @ a @ g1 != a:
        raise VerificationError("g0^t a g1 = a fails")
    return [g0] + [g1 if k % 2 == 1 else g1invT for k in range(1, m)]


def _build_D_padded(p: GroupParams) -> ExactMatrix:
    blocks = _diag_blocks(p)
    m, b = len(blocks), block_size(p.family)
    grid: list[list[ExactMatrix | None]] = [[None] * m for _ in range(m)]
    for k, blk in enumerate(blocks):
        grid[k][k] = blk
    return _assemble(grid, b, p.field)


def build_D(params: GroupParams) -> ExactMatrix:
    """The diagonal-part matrix of ``params`` (nil-part ignored)."""
    return _verified(params.family, params.n, _build_D_padded(params), "D element")


# ---------------------------------------------------------------- N
def _build_N_padded(p: GroupParams) -> ExactMatrix:
    fam, F = p.family, p.field
    m, b = num_blocks(fam, p.n), block_size(fam)
    xs = _blocks(p)
    K = len(xs)
    st = star_blocks(fam, xs, max(m, 1), p.lam, F)
    zero = ExactMatrix.zeros(b, b, F)
    one = ExactMatrix.identity(b, F)

    def x(d: int) -> ExactMatrix:
        return xs[d - 1] if 1 <= d <= K else zero

    def low(d: int) -> ExactMatrix:
        return -x(d).T + st[d - 1]

    grid: list[list[ExactMatrix | None]] = [[None] * m for _ in range(m)]
    for i in range(1, m + 1):
        grid[i - 1][i - 1] = one
    if fam in ODD_TYPE:
        for i in range(1, m + 1, 2):
            for j in range(2, m + 1, 2):
                grid[i - 1][j - 1] = x((j - i + 1) // 2) if i < j else -x((i - j + 1) // 2).T
    elif fam in EVEN_TYPE:
        for i in range(1, m + 1):
            for s in range(1, m):
                if i % 2 and i - 2 * s >= 1:
                    grid[i - 2 * s - 1][i - 1] = x(s)
                if i % 2 == 0 and i + 2 * s <= m:
                    grid[i + 2 * s - 1][i - 1] = low(s)
    else:
        grid[0][0] = ExactMatrix(A_BLOCK, F)
        if fam == AN2_MOD3:
            grid[1][0] = ExactMatrix([[0, p.lam], [0, 0]], F)
        upper_parity = 0 if fam == AN2_MOD1 else 1
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                if j % 2 == upper_parity:
                    grid[i - 1][j - 1] = x(j - i)
                elif i >= 2:
                    grid[j - 1][i - 1] = low(j - i)
    return _assemble(grid, b, F)


def build_N(params: GroupParams) -> ExactMatrix:
    """The nil-part matrix of ``params`` (diag-part ignored)."""
    return _verified(params.family, params.n, _build_N_padded(params), "N element")


def build(params: GroupParams) -> ExactMatrix:
    """``build_D(params) @ build_N(params)``, verified."""
    Xp = _build_D_padded(params) @ _build_N_padded(params)
    return _verified(params.family, params.n, Xp, "group element")


# ---------------------------------------------------------------- reading params back
def _block(Mp: ExactMatrix, b: int, i: int, j: int) -> ExactMatrix:
    return Mp.submatrix(b * (i - 1), b * i, b * (j - 1), b * j)


def _pad(family: str, M: ExactMatrix) -> ExactMatrix:
    return pad_for_blocks(M) if family in PADDED else M


def _read_nil(family: str, n: int, Mp: ExactMatrix) -> tuple[tuple, object]:
    b = block_size(family)
    K = nil_count(family, n)
    out = []
    for d in range(1, K + 1):
        if family in ODD_TYPE:
            blk = _block(Mp, b, 1, 2 * d)
        elif family in EVEN_TYPE:
            blk = _block(Mp, b, 1, 1 + 2 * d)
        else:
            first_row = (1 + d) % 2 == (0 if family == AN2_MOD1 else 1)
            blk = _block(Mp, b, 1, 1 + d) if first_row else _block(Mp, b, 2, 2 + d)
        out.append(blk[0, 0] if b == 1 else blk)
    lam = _block(Mp, b, 2, 1)[0, 1] if family == AN2_MOD3 else 0
    return tuple(out), lam


def _read_diag(family: str, Mp: ExactMatrix) -> tuple:
    if family in AN_FAMILIES:
        return (Mp[0, 0],)
    if family in (AN2_MOD0, AN2_MOD2):
        return (_block(Mp, 2, 1, 1),)
    return (Mp[1, 1], Mp[2, 2], Mp[2, 3])


def refactor_N(M: ExactMatrix, family: str, n: int) -> GroupParams:
    """Recover N-parameters from a stripped matrix and confirm by rebuilding."""
    check_family(family, n)
    Mp = _pad(family, M)
    nil, lam = _read_nil(family, n, Mp)
    ident = GroupParams.identity(family, n, M.field)
    try:
        p = GroupParams(family, n, ident.diag, nil, lam, M.field)
    except PreconditionError as exc:
        raise PreconditionError(f"matrix is not an N element: {exc}") from exc
    if build_N(p) != M:
        raise PreconditionError("matrix is not an N element (rebuild differs)")
    return p


def semidirect_factor(X: ExactMatrix, family: str, n: int) -> tuple[GroupParams, GroupParams]:
    """Split a member into ``(d, nPart)`` with ``build(d) @ build(nPart) = X``."""
    check_family(family, n)
    F = X.field
    if X.shape != (n, n) or not is_solution(X, family_matrix(family, n, F)):
        raise PreconditionError("X is not a member of the solution monoid")
    diag = _read_diag(family, _pad(family, X))
    try:
        d = GroupParams.identity(family, n, F).with_diag(diag)
    except PreconditionError as exc:
        raise PreconditionError(f"diag-part singular: {exc}") from exc
    Nm = inverse(build_D(d)) @ X
    nPart = refactor_N(Nm, family, n)
    if build_D(d) @ build_N(nPart) != X:
        raise VerificationError("D x N factorization does not reproduce X")
    return d, nPart


def merge(d: GroupParams, nPart: GroupParams) -> GroupParams:
    return GroupParams(d.family, d.n, d.diag, nPart.nil, nPart.lam, d.field)


def factor_params(X: ExactMatrix, family: str, n: int) -> GroupParams:
    d, nPart = semidirect_factor(X, family, n)
    return merge(d, nPart)


# ---------------------------------------------------------------- group operations
def compose(g1: GroupParams, g2: GroupParams) -> tuple[ExactMatrix, GroupParams]:
    """Product matrix and its refactored parameters (confirmed by rebuilding)."""
    if (g1.family, g1.n) != (g2.family, g2.n):
        raise PreconditionError("compose needs the same family and n")
    g1.field.require_same(g2.field)
    P = build(g1) @ build(g2)
    refactored = factor_params(P, g1.family, g1.n)
    if build(refactored) != P:
        raise VerificationError("refactored product does not rebuild")
    return P, refactored


def invert_nil(p: GroupParams) -> GroupParams:
    """Inverse of an N element: ``y_d = -x_d + (x_d^*)^t`` and ``lam -> -lam``."""
    q = p.nil_only()
    st = star_blocks(q.family, _blocks(q), len(q.nil), q.lam, q.field)
    ys = []
    for d, x in enumerate(_blocks(q), start=1):
        y = -x + st[d - 1].T
        ys.append(y[0, 0] if block_size(q.family) == 1 else y)
    inv = q.with_nil(tuple(ys), -q.lam)
    if build_N(inv) @ build_N(q) != ExactMatrix.identity(q.n, q.field):
        raise VerificationError("N inverse formula fails")
    return inv


def invert_diag(p: GroupParams) -> GroupParams:
    F = p.field
    if p.family in AN_FAMILIES:
        diag = (1 / p.diag[0],)
    elif p.family in (AN2_MOD0, AN2_MOD2):
        diag = (inverse(p.diag[0]),)
    else:
        beta, alpha, free = p.diag
        diag = (1 / beta, 1 / alpha, -free * beta / alpha)
    inv = p.diag_only().with_diag(diag)
    if build_D(inv) @ build_D(p.diag_only()) != ExactMatrix.identity(p.n, F):
        raise VerificationError("D inverse formula fails")
    return inv


def invert(g: GroupParams) -> GroupParams:
    """Parameters of ``build(g)^{-1}``: ``N^{-1} D^{-1}`` refactored as ``D N``."""
    Y = build_N(invert_nil(g)) @ build_D(invert_diag(g))
    inv = factor_params(Y, g.family, g.n)
    if build(inv) @ build(g) != ExactMatrix.identity(g.n, g.field):
        raise VerificationError("inverse does not multiply to the identity")
    return inv


def conjugation_check(d: GroupParams, nPart: GroupParams) -> bool:
    """``D n D^{-1}`` is a member whose factorization has identity diag-part."""
    Dm = build_D(d)
    C = Dm @ build_N(nPart) @ inverse(Dm)
    try:
        dd, _ = semidirect_factor(C, d.family, d.n)
    except PreconditionError:
        return False
    return dd.diag == GroupParams.identity(d.family, d.n, d.field).diag


def det(params: GroupParams):
    return determinant(build(params))


def z_params(x: GroupParams, y: GroupParams) -> list:
    """``z_m = x_m + y_m + sum_{a+b=m} x_a y_b`` for the even-type product rule."""
    xs, ys = _blocks(x), _blocks(y)
    out = []
    for m_ in range(1, len(xs) + 1):
        z = xs[m_ - 1] + ys[m_ - 1]
        for a_ in range(1, m_):
            z = z + xs[a_ - 1] @ ys[m_ - a_ - 1]
        out.append(z[0, 0] if block_size(x.family) == 1 else z)
    return out


def prod_multiplicative_holds(x: GroupParams, y: GroupParams, up_to: int) -> bool:
    """``z^* = x^* + y^* + sum y_k^t x_l^t + sum L(x_l) L(y_k)`` with ``L(u) = -u^t + u^*``."""
    F = x.field
    zs = z_params(x, y)
    zp = x.with_nil(tuple(zs))
    xs, ys = _blocks(x), _blocks(y)
    K = len(xs)
    xst = star_blocks(x.family, xs, K, 0, F)
    yst = star_blocks(y.family, ys, K, 0, F)
    zst = star_blocks(zp.family, _blocks(zp), K, 0, F)
    for nn in range(1, min(up_to, K) + 1):
        rhs = xst[nn - 1] + yst[nn - 1]
        for l in range(1, nn):
            k = nn - l
            rhs = rhs + ys[k - 1].T @ xs[l - 1].T
            rhs = rhs + (-xs[l - 1].T + xst[l - 1]) @ (-ys[k - 1].T + yst[k - 1])
        if zst[nn - 1] != rhs:
            return False
    return True


__all__ = [
    "build_D",
    "build_N",
    "build",
    "refactor_N",
    "semidirect_factor",
    "factor_params",
    "merge",
    "compose",
    "invert",
    "invert_nil",
    "invert_diag",
    "conjugation_check",
    "det",
    "z_params",
    "prod_multiplicative_holds",
]
