"""
Dense univariate polynomials with exact rational coefficients.

``PolyT`` carries the deformation parameter t throughout the package, and the
same class is reused for characteristic polynomials in the spectral variable
(pass ``var="x"`` when rendering).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ..errors import ConsistencyError
from .rational import Scalar

Coefficient = Union[int, Fraction]


def _strip(coeffs: Iterable[Coefficient]) -> tuple[Fraction, ...]:
    out = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class PolyT:
    """Polynomial Σ coeffs[n]·tⁿ; trailing zeros are stripped on construction."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Coefficient] = ()) -> None:
        object.__setattr__(self, "coeffs", _strip(coeffs))

    # ─── Constructors ────────────────────────────────────────────────────

    @classmethod
    def zero(cls) -> "PolyT":
        return cls(())

    @classmethod
    def one(cls) -> "PolyT":
        return cls((1,))

    @classmethod
    def constant(cls, value: Coefficient) -> "PolyT":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff: Coefficient = 1) -> "PolyT":
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return cls([0] * power + [coeff])

    @classmethod
    def t(cls) -> "PolyT":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[Coefficient]) -> "PolyT":
        """Monic ∏ (x − r)."""
        result = cls.one()
        for r in roots:
            result = result * cls((-Fraction(r), 1))
        return result

    # ─── Inspection ──────────────────────────────────────────────────────

    @property
    def degree(self) -> int:
        """Degree; −1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # ─── Ring operations ─────────────────────────────────────────────────

    @staticmethod
    def _coerce(other: "PolyT | Scalar") -> "PolyT":
        if isinstance(other, PolyT):
            return other
        return PolyT((other,))

    def __neg__(self) -> "PolyT":
        return PolyT(-c for c in self.coeffs)

    def __add__(self, other: "PolyT | Scalar") -> "PolyT":
        o = PolyT._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyT(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "PolyT | Scalar") -> "PolyT":
        return self + (-PolyT._coerce(other))

    def __rsub__(self, other: "PolyT | Scalar") -> "PolyT":
        return PolyT._coerce(other) - self

    def __mul__(self, other: "PolyT | Scalar") -> "PolyT":
        o = PolyT._coerce(other)
        if self.is_zero() or o.is_zero():
            return PolyT.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return PolyT(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PolyT":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = PolyT.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Coefficient) -> "PolyT":
        f = Fraction(factor)
        return PolyT(c * f for c in self.coeffs)

    def __divmod__(self, other: "PolyT") -> tuple["PolyT", "PolyT"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        if len(rem) - 1 < d:
            return PolyT.zero(), self
        quot = [Fraction(0)] * (len(rem) - d)
        for shift in range(len(rem) - 1 - d, -1, -1):
            c = rem[shift + d] / lead
            quot[shift] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= c * b
        return PolyT(quot), PolyT(rem[:d] if d > 0 else [])

    def __mod__(self, other: "PolyT") -> "PolyT":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PolyT") -> "PolyT":
        return divmod(self, other)[0]

    def exact_div(self, other: "PolyT") -> "PolyT":
        """Quotient of a division known to be exact; raises ConsistencyError otherwise."""
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ConsistencyError(f"division of {self} by {other} leaves remainder {rem}")
        return quot

    # ─── Calculus & gcd ──────────────────────────────────────────────────

    def derivative(self) -> "PolyT":
        return PolyT(n * c for n, c in enumerate(self.coeffs) if n > 0)

    def monic(self) -> "PolyT":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "PolyT") -> "PolyT":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree(self) -> "PolyT":
        """p / gcd(p, p′): same distinct roots, each simple."""
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        return self.exact_div(g)

    def compose_t2(self) -> "PolyT":
        """Substitute t ↦ t²."""
        out: list[Fraction] = []
        for c in self.coeffs:
            out.extend([c, Fraction(0)])
        return PolyT(out)

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive with integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(c.numerator * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    # ─── Evaluation ──────────────────────────────────────────────────────

    def __call__(self, value: Union[int, Fraction, float]) -> Union[Fraction, float]:
        if isinstance(value, float):
            acc_f = 0.0
            for c in reversed(self.coeffs):
                acc_f = acc_f * value + float(c)
            return acc_f
        x = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, value: Union[int, Fraction]) -> int:
        v = self(Fraction(value))
        return (v > 0) - (v < 0)

    # ─── Rendering ───────────────────────────────────────────────────────

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if n == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if n == 1 else f"{head}{var}^{n}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"PolyT({self.to_str()})"


def factor_t2_one_minus_t2(p: PolyT) -> tuple[Fraction, PolyT] | None:
    """Split p = content · t²(1−t²)² · R with R primitive, by trial division.

    Returns None when either division leaves a remainder or p is zero.
    """
    if p.is_zero():
        return None
    t2 = PolyT.monomial(2)
    one_minus_t2_sq = PolyT((1, 0, -1)) ** 2
    q1, r1 = divmod(p, t2)
    if not r1.is_zero():
        return None
    q2, r2 = divmod(q1, one_minus_t2_sq)
    if not r2.is_zero():
        return None
    content = q2.content()
    if q2.leading < 0:
        content = -content
    return content, q2.scale(1 / content)


def format_factored(p: PolyT, var: str = "t") -> str:
    """Render in the published ``c t^2 (1 - t^2)^2 (R)`` shape when the split succeeds."""
    split = factor_t2_one_minus_t2(p)
    if split is None:
        return p.to_str(var)
    content, rest = split
    head = f"{content} " if content != 1 else ""
    tail = "" if rest == PolyT.one() else f" ({rest.to_str(var)})"
    return f"{head}{var}^2 (1 - {var}^2)^2{tail}"


def poly_arith(a: PolyT, b: PolyT, op: str) -> PolyT:
    """Dispatch ``add``/``sub``/``mul`` on two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation: {op!r}")
