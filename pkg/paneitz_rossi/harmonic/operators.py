"""
CR operators of the Rossi sphere as exact actions on ``HarmonicPoly``.

Generators on the round sphere:

* Z₁  = w̄ ∂/∂z − z̄ ∂/∂w     ℋ_{p,q} → ℋ_{p−1,q+1}
* Z₁̄  = w ∂/∂z̄ − z ∂/∂w̄     ℋ_{p,q} → ℋ_{p+1,q−1}
* T   = √−1 (z∂z + w∂w − z̄∂z̄ − w̄∂w̄)
* □_b = −Z₁Z₁̄,  □̄_b = −Z₁̄Z₁

The Rossi deformation only enters through t-polynomial coefficients of words
in these generators, so every t-dependent operator is an ``OperatorWord``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, Mapping, Sequence

from ..arith.poly import PolyT
from ..arith.rational import GaussianRational
from ..errors import ConsistencyError
from .poly import Bidegree, HarmonicPoly, Terms, add_term

Generator = Literal["Z1", "Z1bar", "T", "box_b", "box_b_bar"]
Word = tuple[Generator, ...]


# ─── Generators ──────────────────────────────────────────────────────────────


def apply_Z1(f: HarmonicPoly) -> HarmonicPoly:
    """z^a w^b z̄^c w̄^d ↦ a·z^{a−1}w^b z̄^c w̄^{d+1} − b·z^a w^{b−1}z̄^{c+1}w̄^d."""
    p, q = f.bidegree
    out: Terms = {}
    for (a, b, c, d), coeff in f.terms.items():
        if a:
            add_term(out, (a - 1, b, c, d + 1), coeff * a)
        if b:
            add_term(out, (a, b - 1, c + 1, d), coeff * (-b))
    return HarmonicPoly((p - 1, q + 1), out)


def apply_Z1bar(f: HarmonicPoly) -> HarmonicPoly:
    """z^a w^b z̄^c w̄^d ↦ c·z^a w^{b+1}z̄^{c−1}w̄^d − d·z^{a+1}w^b z̄^c w̄^{d−1}."""
    p, q = f.bidegree
    out: Terms = {}
    for (a, b, c, d), coeff in f.terms.items():
        if c:
            add_term(out, (a, b + 1, c - 1, d), coeff * c)
        if d:
            add_term(out, (a + 1, b, c, d - 1), coeff * (-d))
    return HarmonicPoly((p + 1, q - 1), out)


def apply_T(f: HarmonicPoly) -> HarmonicPoly:
    p, q = f.bidegree
    return f.scale(GaussianRational(0, p - q))


def apply_box_b(f: HarmonicPoly) -> HarmonicPoly:
    return -apply_Z1(apply_Z1bar(f))


def apply_box_b_bar(f: HarmonicPoly) -> HarmonicPoly:
    return -apply_Z1bar(apply_Z1(f))


GENERATORS: dict[str, Callable[[HarmonicPoly], HarmonicPoly]] = {
    "Z1": apply_Z1,
    "Z1bar": apply_Z1bar,
    "T": apply_T,
    "box_b": apply_box_b,
    "box_b_bar": apply_box_b_bar,
}


def apply_word(word: Sequence[str], f: HarmonicPoly) -> HarmonicPoly:
    """Apply a composition; the rightmost generator acts first."""
    for name in reversed(word):
        if f.is_zero():
            break
        f = GENERATORS[name](f)
    return f


# ─── t-combinations of harmonic polynomials ─────────────────────────────────


@dataclass
class TCombination:
    """Σ tⁿ·fₙ,β with each fₙ,β a harmonic polynomial of bidegree β."""

    parts: dict[tuple[int, Bidegree], HarmonicPoly] = field(default_factory=dict)

    def add(self, power: int, f: HarmonicPoly) -> None:
        if f.is_zero():
            return
        key = (power, f.bidegree)
        total = self.parts[key] + f if key in self.parts else f
        if total.is_zero():
            self.parts.pop(key, None)
        else:
            self.parts[key] = total

    def add_scaled(self, coeff: PolyT, f: HarmonicPoly) -> None:
        for n, c in enumerate(coeff.coeffs):
            if c:
                self.add(n, f.scale(c))

    def is_zero(self) -> bool:
        return not self.parts

    def bidegrees(self) -> set[Bidegree]:
        return {beta for _, beta in self.parts}

    def project_onto(self, basis: Sequence[HarmonicPoly]) -> list[PolyT]:
        """Coordinates in a basis whose members have pairwise distinct bidegrees.

        Each group must be an exact real rational multiple of the basis member
        of its bidegree; anything else is a ConsistencyError.
        """
        by_bidegree = {u.bidegree: idx for idx, u in enumerate(basis)}
        coords: list[dict[int, GaussianRational]] = [{} for _ in basis]
        for (power, beta), group in sorted(self.parts.items()):
            idx = by_bidegree.get(beta)
            if idx is None:
                raise ConsistencyError(f"t^{power} component in bidegree {beta} lies outside the basis")
            u = basis[idx]
            pivot = u.pivot()
            ratio = group.coefficient(pivot) / u.coefficient(pivot)
            if not (group - u.scale(ratio)).is_zero():
                raise ConsistencyError(
                    f"t^{power} component in bidegree {beta} is not a multiple of basis vector {idx + 1}"
                )
            if not ratio.is_real():
                raise ConsistencyError(f"non-real coordinate {ratio} at basis vector {idx + 1}")
            coords[idx][power] = coords[idx].get(power, GaussianRational()) + ratio
        return [
            PolyT(c.get(n, GaussianRational()).re for n in range(max(c, default=-1) + 1))
            for c in coords
        ]


# ─── Operator words ──────────────────────────────────────────────────────────


@dataclass(frozen=True)
class OperatorWord:
    """Σ coeffₛ(t)·(g₁∘g₂∘…) over words in the generators."""

    terms: Mapping[Word, PolyT] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for word in self.terms:
            unknown = [g for g in word if g not in GENERATORS]
            if unknown:
                raise ValueError(f"unknown generators {unknown}")
        object.__setattr__(
            self, "terms", {w: c for w, c in self.terms.items() if not c.is_zero()}
        )

    @classmethod
    def generator(cls, name: Generator, coeff: PolyT | None = None) -> "OperatorWord":
        return cls({(name,): coeff if coeff is not None else PolyT.one()})

    @classmethod
    def sum(cls, words: Iterable["OperatorWord"]) -> "OperatorWord":
        total = cls()
        for w in words:
            total = total + w
        return total

    def __add__(self, other: "OperatorWord") -> "OperatorWord":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, PolyT.zero()) + c
        return OperatorWord(acc)

    def scale(self, coeff: PolyT) -> "OperatorWord":
        return OperatorWord({w: c * coeff for w, c in self.terms.items()})

    def __matmul__(self, other: "OperatorWord") -> "OperatorWord":
        """Composition self∘other."""
        acc: dict[Word, PolyT] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, PolyT.zero()) + c1 * c2
        return OperatorWord(acc)

    def apply(self, f: HarmonicPoly) -> TCombination:
        out = TCombination()
        for word, coeff in self.terms.items():
            out.add_scaled(coeff, apply_word(word, f))
        return out


_ONE = PolyT.one()
_T = PolyT.t()


def kohn_word() -> OperatorWord:
    """(1−t²)□_b(t) = □_b − tZ₁² − tZ₁̄² + t²□̄_b."""
    return OperatorWord(
        {
            ("box_b",): _ONE,
            ("Z1", "Z1"): -_T,
            ("Z1bar", "Z1bar"): -_T,
            ("box_b_bar",): PolyT.monomial(2),
        }
    )


def kohn_bar_word() -> OperatorWord:
    """(1−t²)□̄_b(t) = □̄_b − tZ₁̄² − tZ₁² + t²□_b."""
    return OperatorWord(
        {
            ("box_b_bar",): _ONE,
            ("Z1bar", "Z1bar"): -_T,
            ("Z1", "Z1"): -_T,
            ("box_b",): PolyT.monomial(2),
        }
    )


def q_word() -> OperatorWord:
    """(1−t²)²𝒬(t) = 4tZ₁̄² − 4t²(□_b + □̄_b) + 4t³Z₁²."""
    return OperatorWord(
        {
            ("Z1bar", "Z1bar"): PolyT.monomial(1, 4),
            ("box_b",): PolyT.monomial(2, -4),
            ("box_b_bar",): PolyT.monomial(2, -4),
            ("Z1", "Z1"): PolyT.monomial(3, 4),
        }
    )


def calp_word() -> OperatorWord:
    """(1−t²)²P(t) = (1−t²)□̄_b(t)∘(1−t²)□_b(t) + (1−t²)²𝒬(t)."""
    return (kohn_bar_word() @ kohn_word()) + q_word()


def apply_calP(f: HarmonicPoly) -> TCombination:
    return calp_word().apply(f)
