"""
Closed-form Paneitz blocks 𝒫ₖ(t) on the Rossi sphere.

The block acts on the odd chain ℋ_{2k−1,0} → ℋ_{2k−3,2} → … → ℋ_{1,2k−2}.
Every entry is built from the band coefficient cₖ(l) = (l−2)(2k−l+2).

Two faces of the same matrix are produced:

* the symmetric face, in the orthonormal chain vᵢ, whose off-diagonal
  entries carry square roots (``RadicalEntry``);
* the balanced face, in the unnormalized chain uᵢ = Z₁^{2i−2}u₁, obtained by
  the diagonal similarity D⁻¹MD with δ₁ = 1, δᵢ₊₁ = δᵢ·√(cₖ(2i+1)cₖ(2i+2)).
  All radicals clear and entries lie in ℤ[t].

Indices in this module's formulas are 1-based; chain vectors with index
≤ 0 or ≥ k+1 are zero, so any term referencing them is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .arith.matrix import PolyMatrix, det_exact
from .arith.poly import PolyT
from .errors import ArgumentError

# ─── Band coefficients ───────────────────────────────────────────────────────


def band_coeff(k: int, l: int) -> int:
    """cₖ(l) = (l − 2)(2k − l + 2)."""
    if k < 1:
        raise ArgumentError(f"block index k must be ≥ 1, got {k}")
    return (l - 2) * (2 * k - l + 2)


def coeff_relation_check(k: int, l: int) -> bool:
    """cₖ(l) + cₖ(l+3) == cₖ(l+1) + cₖ(l+2) − 4."""
    return band_coeff(k, l) + band_coeff(k, l + 3) == (
        band_coeff(k, l + 1) + band_coeff(k, l + 2) - 4
    )


def _require_k(k: int) -> None:
    if k < 1:
        raise ArgumentError(f"block index k must be ≥ 1, got {k}")


# Recurring polynomial factors.
_T = PolyT.t()
_T2 = PolyT.monomial(2)
_ONE_PLUS_T2 = PolyT((1, 0, 1))
_T_ONE_PLUS_T2 = _T * _ONE_PLUS_T2


def diagonal_entry(k: int, i: int) -> PolyT:
    """(1+t²)²c(2i)c(2i+1) + t²(c(2i−2)c(2i) + c(2i+1)c(2i+3)); same in both faces."""
    c = lambda l: band_coeff(k, l)  # noqa: E731
    return (_ONE_PLUS_T2**2).scale(c(2 * i) * c(2 * i + 1)) + _T2.scale(
        c(2 * i - 2) * c(2 * i) + c(2 * i + 1) * c(2 * i + 3)
    )


# ─── Symmetric face ──────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class RadicalEntry:
    """poly(t)·√radicand. A zero radicand forces the zero entry."""

    poly: PolyT
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ArgumentError(f"negative radicand {self.radicand}")
        if self.radicand == 0 and not self.poly.is_zero():
            object.__setattr__(self, "poly", PolyT.zero())

    @classmethod
    def zero(cls) -> "RadicalEntry":
        return cls(PolyT.zero(), 0)

    @classmethod
    def rational(cls, poly: PolyT) -> "RadicalEntry":
        return cls(poly, 1) if not poly.is_zero() else cls.zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def squared(self) -> PolyT:
        return (self.poly * self.poly).scale(self.radicand)

    def evaluate(self, t: float) -> float:
        return float(self.poly(float(t))) * math.sqrt(self.radicand)


@dataclass(frozen=True, slots=True)
class RadicalMatrix:
    """The symmetric face: k×k grid of RadicalEntry, row-major."""

    rows: tuple[tuple[RadicalEntry, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> RadicalEntry:
        i, j = key
        return self.rows[i][j]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def evaluate(self, t: float) -> np.ndarray:
        return np.array([[e.evaluate(t) for e in row] for row in self.rows], dtype=np.float64)

    def leading_block(self, size: int) -> "RadicalMatrix":
        return RadicalMatrix(tuple(row[:size] for row in self.rows[:size]))


def build_symmetric(k: int) -> RadicalMatrix:
    """Symmetric face, assembled column by column from the five-term expansion of 𝒫(t)vⱼ."""
    _require_k(k)
    c = lambda l: band_coeff(k, l)  # noqa: E731
    grid = [[RadicalEntry.zero() for _ in range(k)] for _ in range(k)]
    for j in range(1, k + 1):
        # (row, polynomial factor, radicand); rows outside 1..k are dropped unbuilt.
        column = [
            (j - 2, _T2, c(2 * j - 3) * c(2 * j - 2) * c(2 * j - 1) * c(2 * j)),
            (j - 1, -_T_ONE_PLUS_T2.scale(c(2 * j - 2) + c(2 * j + 1)), c(2 * j - 1) * c(2 * j)),
            (j, diagonal_entry(k, j), 1),
            (j + 1, -_T_ONE_PLUS_T2.scale(c(2 * j) + c(2 * j + 3)), c(2 * j + 1) * c(2 * j + 2)),
            (j + 2, _T2, c(2 * j + 1) * c(2 * j + 2) * c(2 * j + 3) * c(2 * j + 4)),
        ]
        for i, poly, radicand in column:
            if 1 <= i <= k:
                grid[i - 1][j - 1] = RadicalEntry(poly, radicand)
    return RadicalMatrix(tuple(tuple(row) for row in grid))


# ─── Balanced face ───────────────────────────────────────────────────────────


def build_balanced(k: int) -> PolyMatrix:
    """Balanced face: column j holds the coordinates of 𝒫(t)uⱼ in the unnormalized chain."""
    _require_k(k)
    c = lambda l: band_coeff(k, l)  # noqa: E731
    grid = [[PolyT.zero() for _ in range(k)] for _ in range(k)]
    for j in range(1, k + 1):
        column = {
            j - 2: _T2.scale(c(2 * j - 3) * c(2 * j - 2) * c(2 * j - 1) * c(2 * j)),
            j - 1: -_T_ONE_PLUS_T2.scale(
                (c(2 * j - 2) + c(2 * j + 1)) * c(2 * j - 1) * c(2 * j)
            ),
            j: diagonal_entry(k, j),
            j + 1: -_T_ONE_PLUS_T2.scale(c(2 * j) + c(2 * j + 3)),
            j + 2: _T2,
        }
        for i, entry in column.items():
            if 1 <= i <= k:
                grid[i - 1][j - 1] = entry
    return PolyMatrix(tuple(tuple(row) for row in grid))


def balancing_diagonal(k: int) -> list[float]:
    """δ₁ = 1, δᵢ₊₁ = δᵢ·√(cₖ(2i+1)cₖ(2i+2)) as floats."""
    _require_k(k)
    deltas = [1.0]
    for i in range(1, k):
        deltas.append(deltas[-1] * math.sqrt(band_coeff(k, 2 * i + 1) * band_coeff(k, 2 * i + 2)))
    return deltas


@dataclass(frozen=True, slots=True)
class BandMatrix:
    """Both faces of 𝒫ₖ(t); entries vanish for |i − j| > bandwidth."""

    k: int
    symmetric: RadicalMatrix
    balanced: PolyMatrix
    bandwidth: int = 2


def paneitz_block(k: int) -> BandMatrix:
    return BandMatrix(k=k, symmetric=build_symmetric(k), balanced=build_balanced(k))


# ─── Closed-form minors ──────────────────────────────────────────────────────


def eta_closed_form(k: int, l: int) -> PolyT:
    """ηₖ,ₗ(t) = t^{2l}·cₖ(3)·cₖ(2l+3)·∏_{i=1}^{l−1} cₖ(2i+3)²."""
    _require_k(k)
    if not 1 <= l <= k:
        raise ArgumentError(f"minor index l must satisfy 1 ≤ l ≤ {k}, got {l}")
    value = band_coeff(k, 3) * band_coeff(k, 2 * l + 3)
    for i in range(1, l):
        value *= band_coeff(k, 2 * i + 3) ** 2
    return PolyT.monomial(2 * l, value)


def eta_recurrence(k: int, l: int) -> PolyT:
    """ηₖ,ₗ from ηₖ,ₗ₊₁ = t²[c(2l+2)+c(2l+5)]c(2l+3)ηₖ,ₗ − t⁴c(2l+1)c(2l+2)c(2l+3)²ηₖ,ₗ₋₁."""
    _require_k(k)
    if not 1 <= l <= k:
        raise ArgumentError(f"minor index l must satisfy 1 ≤ l ≤ {k}, got {l}")
    c = lambda m: band_coeff(k, m)  # noqa: E731
    prev, cur = PolyT.zero(), PolyT.one()
    for m in range(0, l):
        nxt = _T2.scale((c(2 * m + 2) + c(2 * m + 5)) * c(2 * m + 3)) * cur - PolyT.monomial(
            4, c(2 * m + 1) * c(2 * m + 2) * c(2 * m + 3) ** 2
        ) * prev
        prev, cur = cur, nxt
    return cur


def eta_sign_pattern(k: int) -> list[str]:
    """Expected signs of (ηₖ,₁, …, ηₖ,ₖ) for t ≠ 0: positive except the last."""
    _require_k(k)
    return ["+"] * (k - 1) + ["-"]


# ─── Shifted determinants ────────────────────────────────────────────────────


def det_shifted(k: int, shift: PolyT) -> PolyT:
    """det(𝒫ₖ(t) + shift(t)·I), computed exactly on the balanced face."""
    return det_exact(build_balanced(k).add_scalar_identity(shift))


THREE_T2 = PolyT.monomial(2, 3)

# det(𝒫ₖ(t) + 3t²I) = scale · t²(1−t²)² · R(t²) for k ≥ 2; zero for k = 1.
# Values are (scale, ascending coefficients of R in the variable t²).
KNOWN_SHIFTED_DETERMINANTS: dict[int, tuple[int, tuple[int, ...]]] = {
    1: (0, ()),
    2: (36, (1,)),
    3: (576, (15, 58, 15)),
    4: (6480, (1680, 6549, 15926, 6549, 1680)),
    5: (995328, (44100, 172683, 422712, 825970, 422712, 172683, 44100)),
    6: (
        4536000,
        (
            95800320,
            376277184,
            924268539,
            1815582548,
            3114137570,
            1815582548,
            924268539,
            376277184,
            95800320,
        ),
    ),
}


def known_shifted_determinant(k: int) -> PolyT:
    """The published det(𝒫ₖ(t) + 3t²I) for 1 ≤ k ≤ 6, expanded."""
    if k not in KNOWN_SHIFTED_DETERMINANTS:
        raise ArgumentError(f"no published shifted determinant for k = {k}")
    scale, rest = KNOWN_SHIFTED_DETERMINANTS[k]
    if scale == 0:
        return PolyT.zero()
    one_minus_t2 = PolyT((1, 0, -1))
    return (_T2 * one_minus_t2**2 * PolyT(rest).compose_t2()).scale(scale)


# ─── Parameter range ─────────────────────────────────────────────────────────


def is_out_of_model(t: Union[Fraction, float, int]) -> bool:
    """The Rossi sphere is defined for 0 < |t| < 1; |t| ≥ 1 is flagged, not rejected."""
    return abs(t) >= 1
