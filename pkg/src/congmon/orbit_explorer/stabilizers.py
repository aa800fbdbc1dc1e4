"""Stabilizers of the left action of Sol_{A_6} and Sol_{A_8^2} on square matrices."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..errors import PreconditionError, VerificationError
from ..exact_core import ExactMatrix, Field, Q, kernel, matrix_to_json
from ..group_builders import GroupParams, build
from ..lie_structure.families import AN2_MOD0, AN_EVEN, family_for, family_matrix

FREE = "free"
FORCED_ONE = "forced-to-one"

ROWS_25 = "rows-2-5"
ROWS_34 = "rows-3-4"
ROWS_16 = "rows-1-6"
ZERO = "zero"

# predicted nil-dimension of the stabilizer for a generic Y of each row class (x0 = 1)
BULLET_PREDICTION = {ROWS_25: 0, ROWS_34: 1, ROWS_16: 2}


def _row_nonzero(Y: ExactMatrix, i: int) -> bool:
    return any(Y.row(i))


@dataclass
class StabilizerReport:
    """Exact stabilizer of ``Y`` inside Sol_{A_6} = {D(x0) N(x1, x2)}.

    ``nil_basis`` spans the admissible ``(x1, x2)`` (a linear subspace here).
    """

    target: ExactMatrix
    x0_constraint: str
    nil_basis: list[tuple[Any, Any]]
    classification: str
    literal_bullets: dict[str, bool] = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)

    @property
    def nil_dim(self) -> int:
        return len(self.nil_basis)

    def element(self, x0: object, coeffs: list[object]) -> ExactMatrix:
        F = self.target.field
        x1 = sum((F.coerce(c) * v[0] for c, v in zip(coeffs, self.nil_basis)), F.zero)
        x2 = sum((F.coerce(c) * v[1] for c, v in zip(coeffs, self.nil_basis)), F.zero)
        return build(GroupParams(AN_EVEN, 6, (x0,), (x1, x2), 0, F))

    def contains(self, params: GroupParams) -> bool:
        if self.x0_constraint == FORCED_ONE and params.diag[0] != 1:
            return False
        return build(params) @ self.target == self.target

    def sample(self, rng: random.Random, count: int = 5) -> list[ExactMatrix]:
        out = []
        for _ in range(count):
            x0 = 1 if self.x0_constraint == FORCED_ONE else Fraction(rng.choice([1, 2, 3, -1, Fraction(1, 2)]))
            coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in self.nil_basis]
            out.append(self.element(x0, coeffs))
        return out

    def spot_check(self, rng: random.Random, count: int = 5) -> bool:
        """Sampled members fix ``Y``; x0 = 2 moves ``Y`` when x0 is forced to one."""
        if not all(g @ self.target == self.target for g in self.sample(rng, count)):
            return False
        if self.x0_constraint == FORCED_ONE:
            g = build(GroupParams(AN_EVEN, 6, (2,), (0, 0), 0, self.target.field))
            if g @ self.target == self.target:
                return False
        return True

    def to_json(self) -> dict[str, Any]:
        F = self.target.field
        return {
            "target": matrix_to_json(self.target),
            "x0": self.x0_constraint,
            "nil_basis": [[F.format(a), F.format(b)] for a, b in self.nil_basis],
            "nil_dim": self.nil_dim,
            "classification": self.classification,
            "literal_bullets": self.literal_bullets,
            "findings": self.findings,
        }


def _classify(Y: ExactMatrix) -> str:
    nz = [_row_nonzero(Y, i) for i in range(6)]
    if nz[1] or nz[4]:
        return ROWS_25
    if nz[2] or nz[3]:
        return ROWS_34
    if nz[0] or nz[5]:
        return ROWS_16
    return ZERO


def stabilizer_solA6(Y: ExactMatrix) -> StabilizerReport:
    """Solve ``gY = Y`` over ``g = D(x0) N(x1, x2)`` in Sol_{A_6}.

    In each row chain (1, 3, 5) and (2, 4, 6) the last nonzero row of ``Y`` is
    scaled by ``x0^{+-1}``, so ``x0 = 1`` as soon as ``Y != 0``.  At ``x0 = 1`` the conditions
    are ``x1 Y3 + x2 Y5 = 0``, ``x1 Y5 = 0``, ``x1 Y2 = 0`` and
    ``x1 Y4 + (x2 - x1^2) Y2 = 0``; the quadratic term only survives when
    ``Y2 != 0``, in which case ``x1 = 0`` already, so the system is linear.
    """
    if Y.shape != (6, 6):
        raise PreconditionError("stabilizer_solA6 needs a 6x6 matrix")
    F = Y.field
    cls = _classify(Y)
    if cls == ZERO:
        return StabilizerReport(Y, FREE, [(F.one, F.zero), (F.zero, F.one)], cls)

    R = [Y.row(i) for i in range(6)]
    eqs: list[list[object]] = []
    for k in range(6):
        eqs.append([R[2][k], R[4][k]])
        eqs.append([R[4][k], F.zero])
        eqs.append([R[1][k], F.zero])
        eqs.append([R[3][k], R[1][k]])
    K = kernel(ExactMatrix(eqs, F))
    basis = [(v[0, 0], v[1, 0]) for v in K]
    report = StabilizerReport(Y, FORCED_ONE, basis, cls)

    # exact confirmation that the quadratic term was harmless
    for a, b in basis:
        g = build(GroupParams(AN_EVEN, 6, (1,), (a, b), 0, F))
        if g @ Y != Y:
            raise VerificationError("stabilizer basis element does not fix Y")

    nz = [_row_nonzero(Y, i) for i in range(6)]
    literal = {}
    if nz[0] or nz[5]:
        literal[ROWS_16] = report.nil_dim == BULLET_PREDICTION[ROWS_16]
    if nz[1] or nz[4]:
        literal[ROWS_25] = report.nil_dim == BULLET_PREDICTION[ROWS_25]
    if nz[2] or nz[3]:
        literal[ROWS_34] = report.nil_dim == BULLET_PREDICTION[ROWS_34] and all(a == 0 for a, _ in basis)
    report.literal_bullets = literal
    for tag, ok in literal.items():
        if not ok:
            report.findings.append(f"bullet {tag} does not describe this Y: nil_dim {report.nil_dim}")
    return report


# ---------------------------------------------------------------- 2x2 singular subspaces
def _det2(M: ExactMatrix):
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def singular_subspace_2x2(mats: list[ExactMatrix]) -> bool:
    """True iff every linear combination of ``mats`` is singular.

    ``det(sum t_i M_i)`` is a quadratic form in ``t``; it vanishes identically
    iff all its coefficients do, which polarization reads off exactly.
    """
    if not mats:
        return True
    F = mats[0].field
    if F.characteristic == 2:
        raise PreconditionError("singular_subspace_2x2 rejects characteristic 2")
    for M in mats:
        if M.shape != (2, 2):
            raise PreconditionError("expected 2x2 matrices")
        F.require_same(M.field)
    dets = [_det2(M) for M in mats]
    if any(dets):
        return False
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if _det2(mats[i] + mats[j]) - dets[i] - dets[j]:
                return False
    return True


SHAPES = {
    "(* 0; * 0)": ((0, 1), (1, 1)),
    "(* *; 0 0)": ((1, 0), (1, 1)),
    "(0 *; 0 *)": ((0, 0), (1, 0)),
    "(0 0; * *)": ((0, 0), (0, 1)),
}


def subspace_shapes(mats: list[ExactMatrix]) -> list[str]:
    """The coordinate shapes of singular 2x2 subspaces that contain every matrix."""
    out = []
    for name, zeros in SHAPES.items():
        if all(M[i, j] == 0 for M in mats for (i, j) in zeros):
            out.append(name)
    return out


# ---------------------------------------------------------------- Sol_{A_8^2}
def _blocks_8(X: ExactMatrix) -> list[list[ExactMatrix]]:
    return [[X.submatrix(2 * r, 2 * r + 2, 2 * c, 2 * c + 2) for c in range(4)] for r in range(4)]


@dataclass
class TrivialStabilizerReport:
    trivial: bool
    witness_row: str | None
    shapes: dict[str, list[str]]

    def to_json(self) -> dict[str, Any]:
        return {"trivial": self.trivial, "witness_row": self.witness_row, "shapes": self.shapes}

    def __bool__(self) -> bool:
        return self.trivial


def stabilizer_trivial_solA8sq(X: ExactMatrix) -> TrivialStabilizerReport:
    """True when span{e,f,g,h} or span{i,j,k,l} holds an invertible matrix.

    ``False`` means inconclusive; the shapes of the singular spans are reported.
    """
    if X.shape != (8, 8):
        raise PreconditionError("stabilizer_trivial_solA8sq needs an 8x8 matrix")
    B = _blocks_8(X)
    shapes: dict[str, list[str]] = {}
    for name, row in (("efgh", B[1]), ("ijkl", B[2])):
        if not singular_subspace_2x2(row):
            return TrivialStabilizerReport(True, name, {})
        shapes[name] = subspace_shapes(row)
    return TrivialStabilizerReport(False, None, shapes)


def a8sq_element(s: ExactMatrix, x: ExactMatrix) -> ExactMatrix:
    """The Sol_{A_8^2} element with diagonal ``s, s^-t, s, s^-t`` and top-right ``x``.

    In the D x N coordinates this is ``build(diag=(s,), nil=(s^{-1} x,))``.
    """
    from ..exact_core import inverse

    return build(GroupParams(AN2_MOD0, 8, (s,), (inverse(s) @ x,), 0, s.field))


def a8sq_display(s: ExactMatrix, x: ExactMatrix, transpose_x: bool = True) -> ExactMatrix:
    """Block display ``[[s,0,x,0],[0,s^-t,0,0],[0,0,s,0],[0,-s^-t x' s^-t,0,s^-t]]``.

    ``x'`` is ``x^t`` when ``transpose_x`` else ``x`` as printed.
    """
    from ..exact_core import block_matrix, inverse

    F = s.field
    Z = ExactMatrix.zeros(2, 2, F)
    sit = inverse(s).T
    xx = x.T if transpose_x else x
    return block_matrix([
        [s, Z, x, Z],
        [Z, sit, Z, Z],
        [Z, Z, s, Z],
        [Z, -(sit @ xx @ sit), Z, sit],
    ])


def orbit_display_e_identity(s: ExactMatrix, x: ExactMatrix, f: ExactMatrix, g: ExactMatrix, h: ExactMatrix,
                             i: ExactMatrix, j: ExactMatrix, k: ExactMatrix, l: ExactMatrix) -> dict[str, Any]:
    """Compare ``alpha g`` with the blockwise display for the ``e = I_2`` example."""
    from ..exact_core import block_matrix, inverse

    F = s.field
    Z = ExactMatrix.zeros(2, 2, F)
    I2 = ExactMatrix.identity(2, F)
    G = block_matrix([[Z, Z, Z, Z], [I2, f, g, h], [i, j, k, l], [Z, Z, Z, Z]])
    alpha = a8sq_element(s, x)
    prod = alpha @ G
    sit = inverse(s).T
    y = -(sit @ x.T @ sit)
    expected = block_matrix([
        [x @ i, x @ j, x @ k, x @ l],
        [sit, sit @ f, sit @ g, sit @ h],
        [s @ i, s @ j, s @ k, s @ l],
        [y, y @ f, y @ g, y @ h],
    ])
    literal = a8sq_display(s, x, transpose_x=False)
    A = family_matrix(AN2_MOD0, 8, F)
    return {
        "matches": prod == expected,
        "alpha_is_member": alpha.T @ A @ alpha == A,
        "literal_display_is_member": literal.T @ A @ literal == A,
        "product": prod,
    }


# ---------------------------------------------------------------- orbits
def orbit_sample(family: str, n: int, Y: ExactMatrix, seed: int = 0, count: int = 10,
                 include_identity: bool = False, field: Field = Q) -> list[ExactMatrix]:
    """``g Y`` for seeded group elements ``g``; each output keeps ``W^t A W = Y^t A Y``."""
    fam = family_for(family, n) if family in ("an", "an2") else family
    if Y.nrows != n:
        raise PreconditionError(f"Y must have {n} rows")
    rng = random.Random(seed)
    A = family_matrix(fam, n, field)
    inv = Y.T @ A @ Y
    out = []
    if include_identity:
        out.append(Y)
    while len(out) < count:
        g = build(GroupParams.random(fam, n, rng, field))
        W = g @ Y
        if W.T @ A @ W != inv:
            raise VerificationError("orbit invariant W^t A W changed")
        out.append(W)
    return out
