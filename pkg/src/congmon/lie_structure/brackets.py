"""Structure constants of a labeled generator set."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from ..errors import VerificationError
from ..exact_core import Scalar, SpanSolver, commutator
from .generators import GeneratorSet

LinComb = dict  # label -> nonzero Scalar


def _add(acc: LinComb, other: Mapping, scale=1) -> LinComb:
    for lbl, c in other.items():
        v = acc.get(lbl, 0) + scale * c
        if v:
            acc[lbl] = v
        else:
            acc.pop(lbl, None)
    return acc


@dataclass(frozen=True)
class BracketTable:
    """``entries[(x, y)]`` is ``[x, y]`` (row label x, column label y) as a linear combination."""

    labels: tuple[str, ...]
    entries: Mapping[tuple[str, str], LinComb]

    def entry(self, x: str, y: str) -> LinComb:
        return dict(self.entries.get((x, y), {}))

    def bracket(self, u: Mapping, v: Mapping) -> LinComb:
        """Bilinear extension to arbitrary linear combinations."""
        out: LinComb = {}
        for x, a in u.items():
            for y, b in v.items():
                _add(out, self.entry(x, y), a * b)
        return out

    def is_antisymmetric(self) -> bool:
        return all(self.entry(x, y) == _add({}, self.entry(y, x), -1) for x in self.labels for y in self.labels)

    def jacobi_failures(self) -> list[tuple[str, str, str]]:
        bad = []
        for x, y, z in combinations(self.labels, 3):
            acc: LinComb = {}
            _add(acc, self.bracket({x: 1}, self.entry(y, z)))
            _add(acc, self.bracket({y: 1}, self.entry(z, x)))
            _add(acc, self.bracket({z: 1}, self.entry(x, y)))
            if acc:
                bad.append((x, y, z))
        return bad

    def satisfies_jacobi(self) -> bool:
        return not self.jacobi_failures()

    def rematerializes(self, G: GeneratorSet) -> bool:
        """Every entry, expanded with the generator matrices, equals the matrix commutator."""
        mats = G.as_dict()
        for x in self.labels:
            for y in self.labels:
                M = commutator(mats[x], mats[y])
                for lbl, c in self.entry(x, y).items():
                    M = M - mats[lbl].scale(c)
                if not M.is_zero():
                    return False
        return True

    def to_json(self, fmt=str) -> dict:
        idx = {lbl: i for i, lbl in enumerate(self.labels)}
        rows = []
        for x in self.labels:
            for y in self.labels:
                e = self.entry(x, y)
                if e:
                    rows.append([idx[x], idx[y], [[fmt(c), lbl] for lbl, c in sorted(e.items(), key=lambda t: idx[t[0]])]])
        return {"labels": list(self.labels), "entries": rows}


def format_lincomb(comb: Mapping, order=None) -> str:
    if not comb:
        return "0"
    keys = list(comb) if order is None else [k for k in order if k in comb]
    parts = []
    for lbl in keys:
        c = comb[lbl]
        if c == 1:
            parts.append(f"+{lbl}")
        elif c == -1:
            parts.append(f"-{lbl}")
        else:
            s = str(c)
            parts.append(f"{s if s.startswith('-') else '+' + s}*{lbl}")
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def bracket_table(G: GeneratorSet) -> BracketTable:
    """Solve every commutator against the generator span; fail if one escapes it."""
    solver = SpanSolver(G.matrices)
    entries: dict[tuple[str, str], LinComb] = {}
    for i, x in enumerate(G.labels):
        for j, y in enumerate(G.labels):
            if j <= i:
                continue
            coords = solver.coordinates(commutator(G.matrices[i], G.matrices[j]))
            if coords is None:
                raise VerificationError(f"[{x}, {y}] is not in the span of the generators")
            comb = {G.labels[k]: c for k, c in enumerate(coords) if c}
            if comb:
                entries[(x, y)] = comb
                entries[(y, x)] = {k: -v for k, v in comb.items()}
    return BracketTable(G.labels, entries)


__all__ = ["BracketTable", "LinComb", "bracket_table", "format_lincomb", "Scalar"]
