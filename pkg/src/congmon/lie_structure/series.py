"""Derived and lower central series, radical checks and the odd-case morphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..exact_core import ExactMatrix, SpanSolver, TangentBasis, commutator, span_dim
from ..exact_core.linalg import row_space_rref
from .brackets import BracketTable, bracket_table, format_lincomb
from .families import AN2_MOD0, AN2_MOD1, AN2_MOD2, AN2_MOD3, AN_FAMILIES
from .generators import GeneratorSet, generators_solAn, generators_solAn2


def _mats(x) -> list[ExactMatrix]:
    if isinstance(x, TangentBasis):
        return list(x.basis)
    if isinstance(x, GeneratorSet):
        return list(x.matrices)
    return list(x)


def span_basis(mats: Sequence[ExactMatrix]) -> list[ExactMatrix]:
    """An independent family (RREF rows) spanning the same space."""
    mats = [M for M in mats if not M.is_zero()]
    if not mats:
        return []
    n, m, fld = mats[0].nrows, mats[0].ncols, mats[0].field
    return [
        ExactMatrix.from_entries(n, m, {(j // m, j % m): v for j, v in row}, fld)
        for row in row_space_rref(mats)
    ]


def bracket_space(S: Sequence[ExactMatrix], T: Sequence[ExactMatrix]) -> list[ExactMatrix]:
    return span_basis([commutator(x, y) for x in S for y in T])


def contained(S: Sequence[ExactMatrix], T: Sequence[ExactMatrix]) -> bool:
    """span S is a subspace of span T."""
    S = [M for M in S if not M.is_zero()]
    if not S:
        return True
    if not T:
        return False
    solver = SpanSolver(span_basis(T))
    return all(solver.contains(M) for M in S)


def derived_series(B, max_len: int = 64) -> list[int]:
    """Dimensions of ``g, [g,g], [[g,g],[g,g]], ...`` until they stabilize."""
    cur = span_basis(_mats(B))
    dims = [len(cur)]
    while cur and len(dims) < max_len:
        nxt = bracket_space(cur, cur)
        if len(nxt) == len(cur):
            break
        cur = nxt
        dims.append(len(cur))
    return dims


def lower_central_series(B, max_len: int = 64) -> list[int]:
    """Dimensions of ``g, [g,g], [g,[g,g]], ...`` until they stabilize."""
    g = span_basis(_mats(B))
    cur = g
    dims = [len(cur)]
    while cur and len(dims) < max_len:
        nxt = bracket_space(g, cur)
        if len(nxt) == len(cur):
            break
        cur = nxt
        dims.append(len(cur))
    return dims


def is_solvable(B) -> bool:
    return derived_series(B)[-1] == 0


def is_nilpotent(B) -> bool:
    return lower_central_series(B)[-1] == 0


@dataclass
class RadicalReport:
    family: str
    n: int
    algebra_dim: int
    radical_labels: list[str]
    radical_dim: int
    is_ideal: bool
    radical_solvable: bool
    radical_nilpotent: bool
    quotient_dim: int
    sl2_relations: bool | None
    derived_dims: list[int]
    checks: dict = field(default_factory=dict)
    # recorded, not asserted
    findings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.is_ideal and self.radical_solvable and self.sl2_relations is not False and all(
            self.checks.values()
        )


def _comb(G: GeneratorSet, comb: dict) -> ExactMatrix:
    out = ExactMatrix.zeros(G.n, G.n, G.matrices[0].field)
    for lbl, c in comb.items():
        out = out + G[lbl].scale(c)
    return out


def _nil_labels(G: GeneratorSet, k: int | None = None, at_least: bool = False) -> list[str]:
    out = []
    for lbl in G.labels:
        if lbl[0] in "abcd" and lbl[1:].isdigit():
            idx = int(lbl[1:])
            if k is None or idx == k or (at_least and idx >= k):
                out.append(lbl)
    return out


def radical_decomposition(n: int, kind: str = "an2") -> RadicalReport:
    """Check the named radical (or ideal) of ``sol_{A_n}`` / ``sol_{A_n^2}`` exactly."""
    if kind == "an":
        G = generators_solAn(n)
        g = list(G.matrices)
        dims = derived_series(g)
        return RadicalReport(
            G.family, n, len(g), list(G.labels), len(g), True, dims[-1] == 0, is_nilpotent(g), 0, None, dims
        )
    G = generators_solAn2(n)
    g = list(G.matrices)
    fam = G.family
    kmax = max([int(l[1:]) for l in _nil_labels(G)] + [0])
    if fam in (AN2_MOD0, AN2_MOD2):
        rad = [_comb(G, {"h1": 1, "h2": 1})] + [G[l] for l in _nil_labels(G)]
        rad_labels = ["h1+h2"] + _nil_labels(G)
    elif fam == AN2_MOD1:
        rad = list(g)
        rad_labels = list(G.labels)
    else:
        rad = list(g)
        rad_labels = list(G.labels)
    rad = span_basis(rad)
    checks: dict[str, bool] = {}
    findings: dict[str, bool] = {}
    # the blocks b_{>=k} are ideals; b_k alone is recorded separately
    for k in range(1, kmax + 1):
        bk = [G[l] for l in _nil_labels(G, k, at_least=True)]
        checks[f"b_>={k} ideal"] = contained(bracket_space(g, bk), bk)
    sl2 = None
    if fam in (AN2_MOD0, AN2_MOD2):
        H = _comb(G, {"h1": 1, "h2": -1})
        E, F = G["e"], G["f"]

        def mod_rad(M):
            return contained([M], rad)

        sl2 = (
            mod_rad(commutator(H, E) - E.scale(2))
            and mod_rad(commutator(H, F) + F.scale(2))
            and mod_rad(commutator(E, F) - H)
        )
        if fam == AN2_MOD2:
            a = [G[l] for l in _nil_labels(G)]
            checks["a abelian"] = not bracket_space(a, a)
    else:
        level = ["e", "f", "g"] if fam == AN2_MOD1 else ["e", "f"]
        a = [G[l] for l in level] + [G[l] for l in _nil_labels(G)]
        checks["a ideal"] = contained(bracket_space(g, a), a)
        gg = bracket_space(g, g)
        findings["[g,g] equals a"] = span_dim(gg + a) == span_dim(a) == len(gg)
        checks["quotient by a has dim 2"] = len(g) - span_dim(a) == 2
    return RadicalReport(
        fam,
        n,
        len(g),
        rad_labels,
        len(rad),
        contained(bracket_space(g, rad), rad),
        is_solvable(rad),
        is_nilpotent(rad),
        len(g) - len(rad),
        sl2,
        derived_series(g),
        checks,
        findings,
    )


PHI = {"h1": {"h2": 1}, "h2": {"h1": 1}, "e": {"e": 1}, "g": {"f": -1}, "f": {}}
PHI_NIL = {"a": "d", "b": "c", "c": "b", "d": "a"}


def phi_map(label: str) -> dict:
    if label in PHI:
        return dict(PHI[label])
    return {PHI_NIL[label[0]] + label[1:]: 1}


def _apply(phi, comb: dict) -> dict:
    out: dict = {}
    for lbl, c in comb.items():
        for t, d in phi(lbl).items():
            v = out.get(t, 0) + c * d
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def morphism_failures(src: BracketTable, dst: BracketTable, phi) -> list[str]:
    """Pairs where ``phi([x, y]) != [phi x, phi y]``."""
    bad = []
    for x in src.labels:
        for y in src.labels:
            lhs = _apply(phi, src.entry(x, y))
            rhs = dst.bracket(phi(x), phi(y))
            if lhs != rhs:
                bad.append(f"[{x}, {y}]: phi gives {format_lincomb(lhs)}, bracket gives {format_lincomb(rhs)}")
    return bad


def phi_morphism_check(m: int) -> tuple[bool, list[str]]:
    """The map from ``sol_{A^2_{5+4m}}`` to ``sol_{A^2_{3+4m}}`` on generators."""
    src = bracket_table(generators_solAn2(5 + 4 * m))
    dst = bracket_table(generators_solAn2(3 + 4 * m))
    bad = morphism_failures(src, dst, phi_map)
    return not bad, bad


__all__ = [
    "RadicalReport",
    "bracket_space",
    "contained",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "lower_central_series",
    "morphism_failures",
    "phi_map",
    "phi_morphism_check",
    "radical_decomposition",
    "span_basis",
]
