"""Exact arithmetic over the Gaussian rationals Q(i).

Every number handled by this package is a :class:`GaussianRational`: a complex
number whose real and imaginary parts are arbitrary-precision rationals.  This
is the computable subfield of C in which all classification formulas are
evaluated, so equality is always structural and exact.

The text grammar accepted by :func:`parse_scalar` (and emitted by
:func:`format_scalar`) is the only interchange format for scalars::

    scalar   := rational | rational "i" | rational ("+" | "-") urational "i"
    rational := ["-"] digits ["/" digits]

Examples: ``"3/2-1/4i"``, ``"0"``, ``"-7i"``, ``"5+1i"``.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, ParseError

# Rational scalars are plain Fractions: numerator/denominator are
# arbitrary-precision ints, the denominator is positive and the gcd is 1.
Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "GaussianRational":
        return GaussianRational(Fraction(n), Fraction(0))

    @staticmethod
    def of(re=0, im=0) -> "GaussianRational":
        """Build a scalar from ints, Fractions or (num, den) shorthand."""
        return GaussianRational(Fraction(re), Fraction(im))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations ----------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise DivisionByZero("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        return self * other.inverse()

    def __pow__(self, k: int) -> "GaussianRational":
        if not isinstance(k, int):
            raise TypeError("exponent must be an int")
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = ONE
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1), Fraction(0))
I = GaussianRational(Fraction(0), Fraction(1))


def scalar(re=0, im=0) -> GaussianRational:
    """Shorthand constructor used pervasively in tests."""
    return GaussianRational.of(re, im)


# -- text format -------------------------------------------------------

_RATIONAL = _re.compile(r"-?\d+(?:/\d+)?")


def _parse_rational(text: str, pos: int, allow_sign: bool) -> tuple[Fraction, int]:
    m = _RATIONAL.match(text, pos)
    if not m or (not allow_sign and text[pos] == "-"):
        raise ParseError("expected a rational number", pos)
    token = m.group(0)
    if "/" in token:
        num_s, den_s = token.split("/")
        den = int(den_s)
        if den == 0:
            raise ParseError("zero denominator", pos + token.index("/") + 1)
        value = Fraction(int(num_s), den)
    else:
        value = Fraction(int(token))
    return value, m.end()


def parse_scalar(text: str) -> GaussianRational:
    """Parse the scalar grammar; raise :class:`ParseError` with an offset."""
    if not text:
        raise ParseError("empty scalar", 0)
    first, pos = _parse_rational(text, 0, allow_sign=True)
    if pos == len(text):
        return GaussianRational(first, Fraction(0))
    ch = text[pos]
    if ch == "i":
        if pos + 1 != len(text):
            raise ParseError("trailing characters after imaginary unit", pos + 1)
        return GaussianRational(Fraction(0), first)
    if ch not in "+-":
        raise ParseError("expected '+', '-' or 'i'", pos)
    sign = 1 if ch == "+" else -1
    second, pos2 = _parse_rational(text, pos + 1, allow_sign=False)
    if pos2 == len(text) or text[pos2] != "i":
        raise ParseError("expected trailing 'i'", pos2)
    if pos2 + 1 != len(text):
        raise ParseError("trailing characters after imaginary unit", pos2 + 1)
    return GaussianRational(first, sign * second)


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: GaussianRational) -> str:
    """Inverse of :func:`parse_scalar`; round-trips every value exactly."""
    if not x.im:
        return _format_fraction(x.re)
    if not x.re:
        return _format_fraction(x.im) + "i"
    sign = "+" if x.im > 0 else "-"
    return _format_fraction(x.re) + sign + _format_fraction(abs(x.im)) + "i"
