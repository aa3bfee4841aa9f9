"""
Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

``Fraction`` already normalizes eagerly: lowest terms, positive denominator,
zero stored as 0/1. This module adds the "p/q" text codec used on the command
line and in JSON, and the Gaussian rationals needed once √−1 enters through
the Reeb field T.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ArgumentError

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")


# ─── Text codec ──────────────────────────────────────────────────────────────


def is_rational_literal(text: str) -> bool:
    """True for strings of the form ``p/q``."""
    return bool(_RATIONAL_RE.match(text))


def is_decimal_literal(text: str) -> bool:
    return bool(_DECIMAL_RE.match(text))


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (q > 0) or a plain integer into a Fraction.

    Raises ArgumentError on anything else, including q = 0.
    """
    match = _RATIONAL_RE.match(text)
    if match:
        num, den = int(match.group(1)), int(match.group(2))
        if den == 0:
            raise ArgumentError(f"denominator must be positive in {text!r}")
        return Fraction(num, den)
    stripped = text.strip()
    if re.fullmatch(r"[+-]?\d+", stripped):
        return Fraction(int(stripped))
    raise ArgumentError(f"not a rational literal: {text!r}")


def parse_decimal_exact(text: str) -> Fraction:
    """Convert a decimal literal to the exact rational it denotes ("0.1" → 1/10)."""
    if not is_decimal_literal(text):
        raise ArgumentError(f"not a decimal literal: {text!r}")
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render as ``p/q``; integers keep the ``/1`` so the text stays self-describing."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# ─── Gaussian rationals ──────────────────────────────────────────────────────


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """re + √−1·im with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @classmethod
    def coerce(cls, value: "GaussianRational | Scalar") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(_as_fraction(value), Fraction(0))

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(Fraction(0), Fraction(1))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_squared()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other: "GaussianRational | Scalar") -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
