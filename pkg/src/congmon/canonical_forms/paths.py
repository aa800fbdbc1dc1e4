"""A_n, its powers and the relabelings that bring them to canonical block form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PreconditionError, VerificationError
from ..exact_core import ExactMatrix, Field, Q, direct_sum
from .blocks import CanonicalBlock, make_block


def make_An(n: int, field: Field = Q) -> ExactMatrix:
    if n < 1:
        raise PreconditionError("A_n needs n >= 1")
    return ExactMatrix.from_entries(n, n, {(i, i + 1): 1 for i in range(n - 1)}, field)


def make_An_power(n: int, k: int, field: Field = Q) -> ExactMatrix:
    """``A_n^k``: ones on the k-th superdiagonal."""
    if n < 1 or not 1 <= k < n:
        raise PreconditionError(f"need 1 <= k < n, got n = {n}, k = {k}")
    return ExactMatrix.from_entries(n, n, {(i, i + k): 1 for i in range(n - k)}, field)


def path_adjacency(order: list[int], field: Field = Q) -> ExactMatrix:
    """Adjacency matrix of the directed path visiting the 1-based labels in ``order``."""
    n = len(order)
    return ExactMatrix.from_entries(n, n, {(order[t] - 1, order[t + 1] - 1): 1 for t in range(n - 1)}, field)


def relabeled_path_target(n: int, field: Field = Q) -> ExactMatrix:
    """Even ``n = 2k``: the path 1 -> 2k -> 2 -> 2k-1 -> ... -> k -> k+1."""
    if n % 2:
        raise PreconditionError("relabeled path target is defined for even n")
    order = []
    for t in range(n // 2):
        order += [t + 1, n - t]
    return path_adjacency(order, field)


def sigma_target(n: int, field: Field = Q) -> ExactMatrix:
    """What ``sigma^t A_n sigma`` should equal: the odd block, or the relabeled path."""
    if n % 2:
        return make_block(CanonicalBlock("A_odd", n), field)
    return relabeled_path_target(n, field)


def make_sigma(n: int, field: Field = Q) -> ExactMatrix:
    """The permutation matrix from the index rules (1-based ``i = 2a+1`` and ``i = 2a``)."""
    if n < 2:
        raise PreconditionError("make_sigma needs n >= 2")
    ents = {}
    for i in range(1, n + 1):
        if i % 2:
            a = (i - 1) // 2
            j = a + 1
        else:
            a = i // 2
            j = n - a + 1 if n % 2 == 0 else a + n // 2 + 1
        ents[(i - 1, j - 1)] = 1
    return ExactMatrix.from_entries(n, n, ents, field)


def _component_block(m: int) -> CanonicalBlock:
    return CanonicalBlock("A_odd", m) if m % 2 else CanonicalBlock("B_even", m, 0)


@dataclass
class PowerDecomposition:
    n: int
    k: int
    components: list[list[int]]
    sizes: list[int]
    blocks: list[CanonicalBlock]
    P: ExactMatrix
    formula: dict = field(default_factory=dict)

    @property
    def formula_matches(self) -> bool:
        return self.formula.get("matches", False)


def _formula_report(n: int, k: int, sizes: list[int]) -> dict:
    n1 = (n - 1) // k
    alpha = n - k * n1
    beta = Fraction(n - alpha * (n1 + 1), n1) if n1 else None
    report = {"n1": n1, "alpha": alpha, "beta": str(beta) if beta is not None else None}
    if beta is None or beta.denominator != 1 or beta < 0:
        report["predicted_sizes"] = None
        report["matches"] = False
    else:
        pred = sorted([n1] * alpha + [n1 - 1] * int(beta), reverse=True)
        report["predicted_sizes"] = pred
        report["matches"] = pred == sorted(sizes, reverse=True)
        report["predicted_total"] = sum(pred)
    # reading the formula with component sizes n1+1 and n1 (vertices instead of edges)
    shifted = sorted([n1 + 1] * alpha + [n1] * (k - alpha), reverse=True)
    report["vertex_reading_sizes"] = shifted
    report["vertex_reading_matches"] = shifted == sorted(sizes, reverse=True)
    return report


def decompose_An_power(n: int, k: int, field: Field = Q) -> PowerDecomposition:
    """Components of the k-th power of the directed path, with a certified permutation."""
    if k >= n or k < 1:
        raise PreconditionError(f"need 1 <= k < n, got n = {n}, k = {k}")
    comps = [list(range(r, n + 1, k)) for r in range(1, k + 1)]
    sizes = [len(c) for c in comps]
    blocks = [_component_block(m) for m in sizes]
    # Q sends path order to original labels, then each component is relabeled by sigma
    ents = {}
    col = 0
    for comp in comps:
        for v in comp:
            ents[(v - 1, col)] = 1
            col += 1
    Qm = ExactMatrix.from_entries(n, n, ents, field)
    sig = direct_sum([make_sigma(m, field) if m >= 2 else ExactMatrix.identity(1, field) for m in sizes])
    P = Qm @ sig
    target = direct_sum([sigma_target(m, field) if m >= 2 else ExactMatrix.zeros(1, 1, field) for m in sizes])
    if P.T @ make_An_power(n, k, field) @ P != target:
        raise VerificationError(f"power decomposition failed at n = {n}, k = {k}")
    return PowerDecomposition(n, k, comps, sizes, blocks, P, _formula_report(n, k, sizes))
