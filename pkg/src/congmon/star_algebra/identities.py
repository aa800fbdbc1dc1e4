"""The star map, L, z_m and bounded-degree checks of the closure identities."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from ..errors import PreconditionError
from ..exact_core import ExactMatrix, Q
from .freepoly import FreePoly, letter, parse_letter, total

APPENDIX = "appendix"  # L(x) = x^* - x^t
BODY = "body"  # L(x) = x^t - x^*
CONVENTIONS = (APPENDIX, BODY)

# which second factor the quadratic L-term of the star_one identity uses
READING_XX = "xx"  # sum L(x_a) L(x_b), as stated
READING_XY = "xy"  # sum L(x_a) L(y_b), as used in the product rule
READINGS = (READING_XX, READING_XY)


def _g(var: str, i: int, t: bool = False) -> FreePoly:
    return FreePoly.gen(var, i, t)


@lru_cache(maxsize=None)
def _star(var: str, l: int) -> FreePoly:
    if l < 1:
        raise PreconditionError("star index must be >= 1")
    terms = []
    for r in range(1, l):
        s = l - r
        terms.append(_g(var, s, True) * (_g(var, r, True) - _star(var, r)))
    return total(terms)


def star(l: int, var: str = "x") -> FreePoly:
    """``x_l^* = sum_{r+s=l} x_s^t x_r^t - sum_{r+s=l} x_s^t x_r^*`` (memoized)."""
    return _star(var, l)


def L(l: int, convention: str, var: str = "x") -> FreePoly:
    if convention not in CONVENTIONS:
        raise PreconditionError(f"convention must be one of {CONVENTIONS}")
    d = star(l, var) - _g(var, l, True)
    return d if convention == APPENDIX else -d


@lru_cache(maxsize=None)
def z_poly(m: int) -> FreePoly:
    """``z_m = x_m + y_m + sum_{a+b=m} x_a y_b``."""
    if m < 1:
        raise PreconditionError("z index must be >= 1")
    return total([_g("x", m), _g("y", m)] + [_g("x", a) * _g("y", m - a) for a in range(1, m)])


def _z_images(n: int) -> dict[int, FreePoly]:
    return {letter("z", i): z_poly(i) for i in range(1, n + 1)}


def z_star(n: int) -> FreePoly:
    """The star recursion run on formal generators ``z_k`` then expanded."""
    return star(n, "z").substitute(_z_images(n))


def z_L(n: int, convention: str) -> FreePoly:
    return L(n, convention, "z").substitute(_z_images(n))


@dataclass
class IdentityReport:
    name: str
    n: int
    convention: str
    equal: bool
    lhs_terms: int
    rhs_terms: int
    diff: FreePoly = field(default_factory=FreePoly.zero)
    reading: str | None = None

    def to_json(self) -> dict:
        out = {
            "identity": self.name,
            "degree": self.n,
            "convention": self.convention,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
        }
        if self.reading:
            out["reading"] = self.reading
        if not self.equal:
            out["diff_terms"] = len(self.diff)
            out["diff"] = str(self.diff) if len(self.diff) <= 40 else f"{len(self.diff)} words"
        return out


def _pairs(n: int):
    return [(a, n - a) for a in range(1, n)]


def star_one_sides(n: int, convention: str, reading: str = READING_XY) -> tuple[FreePoly, FreePoly]:
    if n < 1:
        raise PreconditionError("degree must be >= 1")
    if reading not in READINGS:
        raise PreconditionError(f"reading must be one of {READINGS}")
    lhs = total(z_poly(a).t() * z_L(b, convention) for a, b in _pairs(n))
    second = "x" if reading == READING_XX else "y"
    rhs = total(
        [star(n, "x"), star(n, "y")]
        + [_g("y", a, True) * _g("x", b, True) for a, b in _pairs(n)]
        + [L(a, convention, "x") * L(b, convention, second) for a, b in _pairs(n)]
    )
    return lhs, rhs


def verify_star_one(n: int, convention: str = BODY, reading: str = READING_XY) -> IdentityReport:
    lhs, rhs = star_one_sides(n, convention, reading)
    diff = lhs - rhs
    return IdentityReport("star_one", n, convention, diff.is_zero(), len(lhs), len(rhs), diff, reading)


def select_convention(max_degree: int = 6) -> dict:
    """Run star_one under every convention/reading pair up to ``max_degree``."""
    table = {}
    for conv in CONVENTIONS:
        for reading in READINGS:
            table[(conv, reading)] = [verify_star_one(k, conv, reading).equal for k in range(1, max_degree + 1)]
    winners = [key for key, row in table.items() if all(row)]
    return {"table": table, "winners": winners}


# ---------------------------------------------------------------- supporting lemmas
def _rearrangement(n: int, conv: str) -> list[tuple[FreePoly, FreePoly]]:
    x, y, z = (lambda i: _g("x", i)), (lambda i: _g("y", i)), (lambda i: _g("z", i))
    lhs = total(x(a) * total(y(s) * z(b - s) for s in range(1, b)) for a, b in _pairs(n))
    rhs = total(total(x(s) * y(a - s) for s in range(1, a)) * z(b) for a, b in _pairs(n))
    return [(lhs, rhs)]


def _Lx(i: int, conv: str) -> FreePoly:
    return L(i, conv, "x")


def _Ly(i: int, conv: str) -> FreePoly:
    return L(i, conv, "y")


def _xt(i: int) -> FreePoly:
    return _g("x", i, True)


def _yt(i: int) -> FreePoly:
    return _g("y", i, True)


def _LL(b: int, conv: str) -> FreePoly:
    return total(_Lx(s, conv) * _Ly(b - s, conv) for s in range(1, b))


def _yx(a: int) -> FreePoly:
    return total(_yt(s) * _xt(a - s) for s in range(1, a))


def _star_two(n: int, conv: str) -> list[tuple[FreePoly, FreePoly]]:
    lhs = total(_Lx(a, conv) * _Ly(b, conv) for a, b in _pairs(n))
    rhs = total(_xt(a) * _Ly(b, conv) - _xt(a) * _LL(b, conv) for a, b in _pairs(n))
    return [(lhs, rhs)]


def _star_three(n: int, conv: str) -> list[tuple[FreePoly, FreePoly]]:
    first = total(
        _yt(a) * _LL(b, conv) - _yx(a) * _Ly(b, conv) + _yx(a) * _LL(b, conv) for a, b in _pairs(n)
    )
    second = total(_yt(a) * star(b, "x") - _yx(a) * _Lx(b, conv) for a, b in _pairs(n))
    return [(first, FreePoly.zero()), (second, FreePoly.zero())]


def _star_four(n: int, conv: str) -> list[tuple[FreePoly, FreePoly]]:
    lhs = total(_yt(a) * _Lx(b, conv) + _yx(a) * _Lx(b, conv) for a, b in _pairs(n))
    rhs = total(_yt(a) * _xt(b) for a, b in _pairs(n))
    return [(lhs, rhs)]


LEMMAS = {
    "rearrangement": _rearrangement,
    "star_two": _star_two,
    "star_three": _star_three,
    "star_four": _star_four,
}


def verify_lemma(which: str, n: int, convention: str = BODY) -> IdentityReport:
    if which not in LEMMAS:
        raise PreconditionError(f"unknown lemma {which!r}; choose from {sorted(LEMMAS)}")
    if convention not in CONVENTIONS:
        raise PreconditionError(f"convention must be one of {CONVENTIONS}")
    parts = LEMMAS[which](n, convention)
    diffs = [lhs - rhs for lhs, rhs in parts]
    bad = next((d for d in diffs if not d.is_zero()), FreePoly.zero())
    lhs_terms = sum(len(lhs) for lhs, _ in parts)
    rhs_terms = sum(len(rhs) for _, rhs in parts)
    return IdentityReport(which, n, convention, bad.is_zero(), lhs_terms, rhs_terms, bad)


# ---------------------------------------------------------------- matrices
def _key(k: object) -> int:
    if isinstance(k, str):
        code = parse_letter(k)
    elif isinstance(k, tuple) and len(k) == 2:
        code = letter(k[0], int(k[1]))
    else:
        raise PreconditionError(f"bad assignment key {k!r}")
    if code & 1:
        raise PreconditionError("assign untransposed generators only")
    return code


def matrix_substitute(p: FreePoly, assignment: Mapping[object, ExactMatrix], size: int | None = None) -> ExactMatrix:
    """Evaluate ``p`` with generators replaced by matrices (``x_i^t`` by transposes).

    Unassigned generators evaluate to zero.
    """
    amap = {_key(k): v for k, v in assignment.items()}
    if size is None:
        if not amap:
            raise PreconditionError("size is required for an empty assignment")
        size = next(iter(amap.values())).nrows
    fields = {m.field for m in amap.values()}
    F = fields.pop() if len(fields) == 1 else Q
    zero = ExactMatrix.zeros(size, size, F)
    one = ExactMatrix.identity(size, F)
    out = zero
    for w, c in p.terms.items():
        term = one
        for code in w:
            base = amap.get(code & ~1)
            if base is None:
                term = zero
                break
            term = term @ (base.T if code & 1 else base)
        out = out + term.scale(c)
    return out


def random_assignment(n: int, rng: random.Random, size: int = 2, vars_: str = "xy") -> dict[str, ExactMatrix]:
    def r() -> Fraction:
        return Fraction(rng.randint(-5, 5), rng.randint(1, 3))

    return {f"{v}{i}": ExactMatrix([[r() for _ in range(size)] for _ in range(size)]) for v in vars_ for i in range(1, n + 1)}


def star_one_matrix_check(n: int, trials: int, rng: random.Random, convention: str = BODY,
                          reading: str = READING_XY) -> bool:
    lhs, rhs = star_one_sides(n, convention, reading)
    for _ in range(trials):
        asg = random_assignment(n, rng)
        if matrix_substitute(lhs, asg) != matrix_substitute(rhs, asg):
            return False
    return True


def monomial_counts(up_to: int) -> list[int]:
    return [len(star(l)) for l in range(1, up_to + 1)]


__all__ = [
    "APPENDIX",
    "BODY",
    "CONVENTIONS",
    "READINGS",
    "READING_XX",
    "READING_XY",
    "IdentityReport",
    "L",
    "LEMMAS",
    "matrix_substitute",
    "monomial_counts",
    "random_assignment",
    "select_convention",
    "star",
    "star_one_matrix_check",
    "star_one_sides",
    "verify_lemma",
    "verify_star_one",
    "z_L",
    "z_poly",
    "z_star",
]
