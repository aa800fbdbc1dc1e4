"""Free noncommutative polynomials over Q with a transpose involution."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import ParseError

VARS = ("x", "y", "z")
_LETTER_RE = re.compile(r"^([xyz])(\d+)(t?)$")

Word = tuple[int, ...]


def letter(var: str, index: int, transposed: bool = False) -> int:
    """Intern ``var_index`` (optionally transposed) as a small integer."""
    if var not in VARS or index < 1:
        raise ParseError(f"bad generator {var}{index}")
    return 6 * index + 2 * VARS.index(var) + int(transposed)


def decode(code: int) -> tuple[str, int, bool]:
    index, rest = divmod(code, 6)
    return VARS[rest // 2], index, bool(rest % 2)


def letter_name(code: int) -> str:
    var, index, t = decode(code)
    return f"{var}{index}" + ("t" if t else "")


class FreePoly:
    """Sparse map ``word -> nonzero Fraction``; the empty word is the unit."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls) -> "FreePoly":
        return cls()

    @classmethod
    def one(cls) -> "FreePoly":
        return cls({(): 1})

    @classmethod
    def gen(cls, var: str, index: int, transposed: bool = False) -> "FreePoly":
        return cls({(letter(var, index, transposed),): 1})

    # arithmetic
    def __add__(self, other: "FreePoly") -> "FreePoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreePoly._raw(out)

    def __neg__(self) -> "FreePoly":
        return FreePoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, other: "FreePoly | int | Fraction") -> "FreePoly":
        if not isinstance(other, FreePoly):
            c = Fraction(other)
            return FreePoly._raw({w: v * c for w, v in self.terms.items()} if c else {})
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return FreePoly._raw(out)

    def __rmul__(self, other: int | Fraction) -> "FreePoly":
        return self * other

    def t(self) -> "FreePoly":
        """The involution: reverse each word and toggle every transpose flag."""
        return FreePoly._raw({tuple(c ^ 1 for c in reversed(w)): v for w, v in self.terms.items()})

    def substitute(self, images: Mapping[int, "FreePoly"]) -> "FreePoly":
        """Replace untransposed letters by ``images``; transposed ones by ``t`` of the image."""
        cache: dict[int, FreePoly] = {}

        def img(code: int) -> FreePoly:
            if code not in cache:
                base = code & ~1
                if base in images:
                    cache[code] = images[base].t() if code & 1 else images[base]
                else:
                    cache[code] = FreePoly._raw({(code,): Fraction(1)})
            return cache[code]

        out = FreePoly.zero()
        for w, c in self.terms.items():
            term = FreePoly._raw({(): c})
            for code in w:
                term = term * img(code)
            out = out + term
        return out

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def letters(self) -> set[int]:
        return {c for w in self.terms for c in w}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            word = "*".join(letter_name(x) for x in w) or "1"
            coef = "" if c == 1 and w else ("-" if c == -1 and w else f"{c}*" if w else f"{c}")
            parts.append(f"{coef}{word}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    @staticmethod
    def _raw(terms: dict[Word, Fraction]) -> "FreePoly":
        p = FreePoly.__new__(FreePoly)
        p.terms = terms
        return p


def total(polys: Iterable[FreePoly]) -> FreePoly:
    out = FreePoly.zero()
    for p in polys:
        out = out + p
    return out


def parse_letter(text: str) -> int:
    m = _LETTER_RE.match(text)
    if not m:
        raise ParseError(f"bad generator name {text!r}")
    return letter(m.group(1), int(m.group(2)), bool(m.group(3)))
