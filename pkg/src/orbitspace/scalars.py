"""Exact scalars: rationals and Gaussian rationals (a + bi with rational a, b).

All arithmetic in the library runs over this field, so every identity is
checked as an exact equality. There is no floating-point mode.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

# Arbitrary-precision rational, always stored reduced with positive denominator.
Rational = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class GaussianRational:
    """An exact complex number with rational real and imaginary parts.

    Immutable. Supports field arithmetic, conjugation, and the squared
    modulus; no square roots are ever materialized.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2; equals (z * z.conjugate()).re."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("0 + 0i has no multiplicative inverse")
        return GaussianRational(self.re / n, -self.im / n)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_pair(self) -> list:
        """Wire form: a pair of reduced "num/den" strings (integers drop "/1")."""
        return [str(self.re), str(self.im)]

    @classmethod
    def from_pair(cls, pair) -> "GaussianRational":
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(
                f"scalar must be a [re, im] pair of strings, got {pair!r}", value=pair
            )
        return cls(parse_rational(pair[0]), parse_rational(pair[1]))


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value, 0)
    return NotImplemented


def parse_rational(text) -> Fraction:
    """Parse "num/den" or the integer shorthand "3". Decimals are rejected."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RAT_RE.match(text):
        raise ParseError(
            f"rational must look like '3' or '-3/4', got {text!r}", value=text
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}", value=text) from None
