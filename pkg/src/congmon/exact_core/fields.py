"""Exact scalar fields: the rationals, the Gaussian rationals and prime fields.

Elements are plain Python objects supporting ``+ - * /`` so that matrix code
can stay field-agnostic.  Rationals are :class:`fractions.Fraction`, Gaussian
rationals are :class:`GaussianRational`, and prime-field residues are
:class:`FpElement`.  Every matrix carries one :class:`Field`; mixing fields is
an error, never a coercion.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ..errors import FieldMismatchError, ParseError, PreconditionError

_RAT = r"-?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_IMAG_RE = re.compile(rf"^({_RAT})?i$")
_FULL_RE = re.compile(rf"^({_RAT})([+-])({_RAT}|-?)i$")


def _parse_rat(text: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    """Canonical text of a rational: lowest terms, no ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re_part: Union[int, Fraction] = 0, im_part: Union[int, Fraction] = 0):
        self.re = Fraction(re_part)
        self.im = Fraction(im_part)

    @staticmethod
    def _lift(other: object) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.im:
            return GaussianRational(self.re * o.re, self.im * o.re)
        if not self.im:
            return GaussianRational(self.re * o.re, self.re * o.im)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """The positive rational ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "GaussianRational":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({format_gaussian(self)})"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: ``a``, ``bi`` or ``a+bi`` (``b`` keeps its own sign)."""
    if not z.im:
        return format_rational(z.re)
    imag = format_rational(z.im) + "i"
    if not z.re:
        return imag
    return f"{format_rational(z.re)}+{imag}"


class FpElement:
    """A residue modulo a prime ``p``, always normalized to ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.v = value % p

    def _lift(self, other: object) -> "FpElement | None":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            return FpElement(other.numerator * pow(other.denominator, -1, self.p), self.p)
        return None

    def __add__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o.v, self.p)

    def __rsub__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(o.v - self.v, self.p)

    def __mul__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElement":
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "FpElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "FpElement":
        return FpElement(-self.v, self.p)

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.v, self.p))

    def __repr__(self) -> str:
        return f"FpElement({self.v} mod {self.p})"


Scalar = Union[Fraction, GaussianRational, FpElement]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A runtime field tag with coercion, parsing and canonical printing."""

    tag: str = ""
    characteristic: int = 0

    def coerce(self, x: object) -> Scalar:
        raise NotImplementedError

    def parse(self, text: object) -> Scalar:
        raise NotImplementedError

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def sqrt_minus_one(self) -> Scalar | None:
        """An element ``i`` with ``i*i = -1`` if the field has one."""
        return None

    def require_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"field {self.tag} vs {other.tag}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return f"Field({self.tag!r})"


class RationalField(Field):
    tag = "q"

    def coerce(self, x: object) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise ParseError("booleans are not scalars")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, GaussianRational):
            if x.im:
                raise FieldMismatchError("non-real Gaussian rational in field q")
            return x.re
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot coerce {x!r} into q")

    def parse(self, text: object) -> Fraction:
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        if not isinstance(text, str):
            raise ParseError(f"expected a string entry, got {text!r}")
        return _parse_rat(text.strip())

    def format(self, x: Scalar) -> str:
        return format_rational(x)


class GaussianField(Field):
    tag = "qi"

    def coerce(self, x: object) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, bool):
            raise ParseError("booleans are not scalars")
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot coerce {x!r} into qi")

    def parse(self, text: object) -> GaussianRational:
        if isinstance(text, int) and not isinstance(text, bool):
            return GaussianRational(text)
        if not isinstance(text, str):
            raise ParseError(f"expected a string entry, got {text!r}")
        s = text.replace(" ", "")
        if _RAT_RE.match(s):
            return GaussianRational(_parse_rat(s))
        m = _IMAG_RE.match(s)
        if m:
            return GaussianRational(0, _parse_rat(m.group(1)) if m.group(1) else 1)
        if s == "-i":
            return GaussianRational(0, -1)
        m = _FULL_RE.match(s)
        if m:
            re_part = _parse_rat(m.group(1))
            body = m.group(3)
            if body in ("", "-"):
                im = Fraction(-1 if body == "-" else 1)
            else:
                im = _parse_rat(body)
            if m.group(2) == "-":
                im = -im
            return GaussianRational(re_part, im)
        raise ParseError(f"not a Gaussian rational literal: {text!r}")

    def format(self, x: Scalar) -> str:
        return format_gaussian(self.coerce(x))

    def sqrt_minus_one(self) -> GaussianRational:
        return GaussianRational(0, 1)


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or p >= 2**31 or not _is_prime(p):
            raise PreconditionError(f"F_p needs a prime p < 2^31, got {p!r}")
        self.p = p
        self.tag = f"fp:{p}"
        self.characteristic = p

    def coerce(self, x: object) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, bool):
            raise ParseError("booleans are not scalars")
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ParseError(f"denominator divisible by {self.p}")
            return FpElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot coerce {x!r} into {self.tag}")

    def parse(self, text: object) -> FpElement:
        if isinstance(text, int) and not isinstance(text, bool):
            return FpElement(text, self.p)
        if not isinstance(text, str):
            raise ParseError(f"expected a string entry, got {text!r}")
        return self.coerce(_parse_rat(text.strip()))

    def format(self, x: Scalar) -> str:
        return str(self.coerce(x).v)

    def sqrt_minus_one(self) -> FpElement | None:
        for r in range(1, self.p):
            if (r * r + 1) % self.p == 0:
                return FpElement(r, self.p)
        return None


Q = RationalField()
QI = GaussianField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Resolve ``"q"``, ``"qi"`` or ``"fp:<p>"``."""
    if tag == "q":
        return Q
    if tag == "qi":
        return QI
    if isinstance(tag, str) and tag.startswith("fp:"):
        try:
            p = int(tag[3:])
        except ValueError as exc:
            raise ParseError(f"bad field tag {tag!r}") from exc
        try:
            return prime_field(p)
        except PreconditionError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field tag {tag!r}")
