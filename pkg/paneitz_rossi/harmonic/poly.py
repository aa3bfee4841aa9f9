"""
Polynomials on ℂ² restricted to S³, in the monomials z^a w^b z̄^c w̄^d.

A ``HarmonicPoly`` lives in a single bidegree (p, q) = (a+b, c+d). Harmonicity
(Δf = 0 for Δ = ∂z∂z̄ + ∂w∂w̄) is checked on demand, not on construction,
because the CR operators in this package map harmonics to harmonics and the
check would be repeated on every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..arith.rational import GaussianRational
from ..errors import ConsistencyError

Monomial = tuple[int, int, int, int]
Bidegree = tuple[int, int]
Terms = dict[Monomial, GaussianRational]
CoeffLike = Union[GaussianRational, int, Fraction]


def monomial_bidegree(m: Monomial) -> Bidegree:
    a, b, c, d = m
    return a + b, c + d


def add_term(terms: Terms, m: Monomial, coeff: GaussianRational) -> None:
    """terms[m] += coeff, dropping the key when it cancels."""
    if coeff.is_zero():
        return
    total = terms.get(m, GaussianRational()) + coeff
    if total.is_zero():
        terms.pop(m, None)
    else:
        terms[m] = total


@dataclass(frozen=True)
class HarmonicPoly:
    """Σ coeff·z^a w^b z̄^c w̄^d of one bidegree. Zero coefficients are never stored."""

    bidegree: Bidegree
    terms: Mapping[Monomial, GaussianRational] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Terms = {}
        for m, coeff in self.terms.items():
            g = GaussianRational.coerce(coeff)
            if g.is_zero():
                continue
            if min(m) < 0:
                raise ConsistencyError(f"negative exponent in monomial {m}")
            if monomial_bidegree(m) != tuple(self.bidegree):
                raise ConsistencyError(
                    f"monomial {m} does not have bidegree {self.bidegree}"
                )
            clean[m] = g
        object.__setattr__(self, "bidegree", tuple(self.bidegree))
        object.__setattr__(self, "terms", clean)

    # ─── Constructors ────────────────────────────────────────────────────

    @classmethod
    def zero(cls, bidegree: Bidegree) -> "HarmonicPoly":
        return cls(bidegree, {})

    @classmethod
    def monomial(cls, m: Monomial, coeff: CoeffLike = 1) -> "HarmonicPoly":
        return cls(monomial_bidegree(m), {m: GaussianRational.coerce(coeff)})

    @classmethod
    def from_terms(cls, bidegree: Bidegree, terms: Iterable[tuple[Monomial, CoeffLike]]) -> "HarmonicPoly":
        acc: Terms = {}
        for m, coeff in terms:
            add_term(acc, m, GaussianRational.coerce(coeff))
        return cls(bidegree, acc)

    # ─── Inspection ──────────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return not self.terms

    def is_harmonic(self) -> bool:
        return not laplacian(self)

    def require_harmonic(self) -> "HarmonicPoly":
        if not self.is_harmonic():
            raise ConsistencyError(f"polynomial of bidegree {self.bidegree} is not harmonic")
        return self

    def coefficient(self, m: Monomial) -> GaussianRational:
        return self.terms.get(m, GaussianRational())

    def pivot(self) -> Monomial:
        """Smallest monomial in lexicographic order; raises on the zero polynomial."""
        if not self.terms:
            raise ConsistencyError("zero polynomial has no pivot monomial")
        return min(self.terms)

    # ─── Linear structure ────────────────────────────────────────────────

    def _check_same_bidegree(self, other: "HarmonicPoly") -> None:
        if self.bidegree != other.bidegree and not (self.is_zero() or other.is_zero()):
            raise ConsistencyError(
                f"cannot add bidegrees {self.bidegree} and {other.bidegree}"
            )

    def __add__(self, other: "HarmonicPoly") -> "HarmonicPoly":
        self._check_same_bidegree(other)
        if self.is_zero():
            return other
        acc = dict(self.terms)
        for m, coeff in other.terms.items():
            add_term(acc, m, coeff)
        return HarmonicPoly(self.bidegree, acc)

    def __neg__(self) -> "HarmonicPoly":
        return HarmonicPoly(self.bidegree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "HarmonicPoly") -> "HarmonicPoly":
        return self + (-other)

    def scale(self, factor: CoeffLike) -> "HarmonicPoly":
        g = GaussianRational.coerce(factor)
        if g.is_zero():
            return HarmonicPoly.zero(self.bidegree)
        return HarmonicPoly(self.bidegree, {m: c * g for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HarmonicPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.bidegree == other.bidegree and self.terms == other.terms

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(())
        return hash((self.bidegree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ("z", "w", "z̄", "w̄")
        parts = []
        for m in sorted(self.terms):
            body = "·".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e
            )
            parts.append(f"({self.terms[m]}){body or '1'}")
        return " + ".join(parts)


def laplacian(f: HarmonicPoly) -> Terms:
    """Δf as raw terms in bidegree (p−1, q−1); empty exactly when f is harmonic."""
    out: Terms = {}
    for (a, b, c, d), coeff in f.terms.items():
        if a and c:
            add_term(out, (a - 1, b, c - 1, d), coeff * (a * c))
        if b and d:
            add_term(out, (a, b - 1, c, d - 1), coeff * (b * d))
    return out


# ─── Sphere pairing ──────────────────────────────────────────────────────────


def _monomial_pairing(m: Monomial, n: Monomial) -> Fraction:
    """∫ z^a w^b z̄^c w̄^d · conj(z^a′ w^b′ z̄^c′ w̄^d′) for the unit-mass measure on S³."""
    a, b, c, d = m
    a2, b2, c2, d2 = n
    alpha, beta = a + c2, b + d2
    if alpha != c + a2 or beta != d + b2:
        return Fraction(0)
    return Fraction(
        math.factorial(alpha) * math.factorial(beta), math.factorial(alpha + beta + 1)
    )


def sphere_inner_product(f: HarmonicPoly, g: HarmonicPoly) -> GaussianRational:
    """⟨f, g⟩ = ∫_{S³} f·ḡ, linear in f and conjugate-linear in g, with ⟨1, 1⟩ = 1."""
    total = GaussianRational()
    for m, fc in f.terms.items():
        for n, gc in g.terms.items():
            w = _monomial_pairing(m, n)
            if w:
                total = total + fc * gc.conjugate() * w
    return total


def norm_squared(f: HarmonicPoly) -> Fraction:
    value = sphere_inner_product(f, f)
    if not value.is_real():
        raise ConsistencyError("⟨f, f⟩ has a nonzero imaginary part")
    return value.re
