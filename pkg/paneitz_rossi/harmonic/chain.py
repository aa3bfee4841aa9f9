"""
Bidegree bases, the chain uᵢ = Z₁^{2i−2}z^{2k−1}, and the brute-force Paneitz block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith.matrix import PolyMatrix, nullspace_rational
from ..arith.poly import PolyT
from ..errors import ArgumentError, ConsistencyError
from ..utils.format import log_debug
from .operators import OperatorWord, apply_Z1, apply_Z1bar, calp_word
from .poly import Bidegree, HarmonicPoly, Monomial, norm_squared, sphere_inner_product


def bidegree_monomials(p: int, q: int) -> list[Monomial]:
    return [(a, p - a, c, q - c) for a in range(p + 1) for c in range(q + 1)]


def basis_Hpq(p: int, q: int) -> list[HarmonicPoly]:
    """Exact basis of ℋ_{p,q}: the null space of Δ from bidegree (p, q) to (p−1, q−1)."""
    if p < 0 or q < 0:
        raise ArgumentError(f"bidegree must be non-negative, got ({p}, {q})")
    source = bidegree_monomials(p, q)
    if p == 0 or q == 0:
        return [HarmonicPoly.monomial(m) for m in source]
    target = {m: r for r, m in enumerate(bidegree_monomials(p - 1, q - 1))}
    rows = [[Fraction(0)] * len(source) for _ in target]
    for col, (a, b, c, d) in enumerate(source):
        if a and c:
            rows[target[(a - 1, b, c - 1, d)]][col] += a * c
        if b and d:
            rows[target[(a, b - 1, c, d - 1)]][col] += b * d
    basis = []
    for vec in nullspace_rational(rows, len(source)):
        basis.append(
            HarmonicPoly.from_terms((p, q), ((m, x) for m, x in zip(source, vec) if x))
        )
    log_debug(f"ℋ_{{{p},{q}}}: {len(basis)} basis polynomials from {len(source)} monomials")
    return basis


# ─── Chain ───────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class ChainBasis:
    """u₁ = z^{2k−1}, uᵢ₊₁ = Z₁²uᵢ; uᵢ ∈ ℋ_{2k−2i+1, 2i−2}."""

    k: int
    u: tuple[HarmonicPoly, ...]

    def bidegrees(self) -> list[Bidegree]:
        return [v.bidegree for v in self.u]

    def gram(self) -> list[list[Fraction]]:
        """Real parts of ⟨uᵢ, uⱼ⟩; the chain is orthogonal so off-diagonals vanish."""
        return [[sphere_inner_product(a, b).re for b in self.u] for a in self.u]

    def norm_ratios(self) -> list[Fraction]:
        """‖uᵢ₊₁‖² / ‖uᵢ‖² for i = 1..k−1."""
        norms = [norm_squared(v) for v in self.u]
        return [norms[i + 1] / norms[i] for i in range(self.k - 1)]

    def is_orthogonal(self) -> bool:
        return all(
            sphere_inner_product(self.u[i], self.u[j]).is_zero()
            for i in range(self.k)
            for j in range(self.k)
            if i != j
        )

    def lowering_ratios(self) -> list[Fraction]:
        """Scalars λᵢ with Z₁̄²uᵢ = λᵢuᵢ₋₁ for i = 2..k."""
        out = []
        for i in range(1, self.k):
            image = apply_Z1bar(apply_Z1bar(self.u[i]))
            prev = self.u[i - 1]
            pivot = prev.pivot()
            ratio = image.coefficient(pivot) / prev.coefficient(pivot)
            if not (image - prev.scale(ratio)).is_zero() or not ratio.is_real():
                raise ConsistencyError(f"Z₁̄²u_{i + 1} is not a real multiple of u_{i}")
            out.append(ratio.re)
        return out


def chain_basis(k: int) -> ChainBasis:
    if k < 1:
        raise ArgumentError(f"block index k must be ≥ 1, got {k}")
    u = [HarmonicPoly.monomial((2 * k - 1, 0, 0, 0))]
    for _ in range(k - 1):
        u.append(apply_Z1(apply_Z1(u[-1])))
    return ChainBasis(k=k, u=tuple(u))


# ─── Brute-force block ───────────────────────────────────────────────────────


def oracle_matrix(k: int, word: OperatorWord | None = None) -> PolyMatrix:
    """Column j holds the chain coordinates of word(uⱼ), by default word = (1−t²)²P(t).

    Raises ConsistencyError if some image leaves span(u₁, …, uₖ).
    """
    chain = chain_basis(k)
    op = word if word is not None else calp_word()
    columns = [op.apply(uj).project_onto(chain.u) for uj in chain.u]
    grid: list[list[PolyT]] = [[columns[j][i] for j in range(k)] for i in range(k)]
    return PolyMatrix(tuple(tuple(row) for row in grid))
