"""
Square matrices over ℚ[t] and over ℚ: exact determinants, leading principal
minors, characteristic polynomials, and null spaces.

Determinants use Bareiss' fraction-free elimination: after step k every
entry is a (k+1)×(k+1) minor, so the division by the previous pivot is exact
in the polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .poly import PolyT

RationalRows = Sequence[Sequence[Fraction]]


@dataclass(frozen=True, slots=True)
class PolyMatrix:
    """k×k matrix of PolyT entries, row-major."""

    rows: tuple[tuple[PolyT, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("PolyMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Union[PolyT, int, Fraction]]]) -> "PolyMatrix":
        return cls(
            tuple(
                tuple(e if isinstance(e, PolyT) else PolyT.constant(e) for e in row)
                for row in rows
            )
        )

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        )

    @classmethod
    def zeros(cls, size: int) -> "PolyMatrix":
        return cls.from_rows([[0] * size for _ in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> PolyT:
        i, j = key
        return self.rows[i][j]

    def max_degree(self) -> int:
        return max((e.degree for row in self.rows for e in row), default=-1)

    def leading_block(self, size: int) -> "PolyMatrix":
        return PolyMatrix(tuple(row[:size] for row in self.rows[:size]))

    def add_scalar_identity(self, shift: PolyT) -> "PolyMatrix":
        """self + shift·I."""
        return PolyMatrix(
            tuple(
                tuple(e + shift if i == j else e for j, e in enumerate(row))
                for i, row in enumerate(self.rows)
            )
        )

    def evaluate(self, t: Union[int, Fraction]) -> list[list[Fraction]]:
        x = Fraction(t)
        return [[e(x) for e in row] for row in self.rows]

    def evaluate_float(self, t: float) -> np.ndarray:
        return np.array([[e(float(t)) for e in row] for row in self.rows], dtype=np.float64)

    def coefficient_lists(self) -> list[list[list[Fraction]]]:
        return [[list(e.coeffs) for e in row] for row in self.rows]


# ─── Determinants over ℚ[t] ──────────────────────────────────────────────────


def det_exact(m: PolyMatrix) -> PolyT:
    """Bareiss fraction-free determinant; zero matrix gives the zero polynomial."""
    n = m.size
    if n == 0:
        return PolyT.one()
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[1, 0] * m[0, 1]
    a = [list(row) for row in m.rows]
    prev_pivot = PolyT.one()
    sign = 1
    for k in range(n - 1):
        pivot_row = k
        while a[pivot_row][k].is_zero():
            pivot_row += 1
            if pivot_row == n:
                return PolyT.zero()
        if pivot_row != k:
            a[pivot_row], a[k] = a[k], a[pivot_row]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev_pivot)
            a[i][k] = PolyT.zero()
        prev_pivot = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def leading_minors(m: PolyMatrix) -> list[PolyT]:
    """[det of the l×l upper-left block for l = 1..k].

    Without row swaps the Bareiss pivot after step l is exactly the
    (l+1)-th leading minor, so one pass yields all of them. A zero pivot
    hands the remaining sizes to det_exact.
    """
    n = m.size
    a = [list(row) for row in m.rows]
    minors: list[PolyT] = []
    prev_pivot = PolyT.one()
    for k in range(n):
        pivot = a[k][k]
        if pivot.is_zero():
            minors.extend(det_exact(m.leading_block(l)) for l in range(k + 1, n + 1))
            return minors
        minors.append(pivot)
        for i in range(k + 1, n):
            lower = a[i][k]
            for j in range(k + 1, n):
                num = pivot * a[i][j]
                if not lower.is_zero():
                    num = num - lower * a[k][j]
                a[i][j] = num.exact_div(prev_pivot) if not num.is_zero() else num
            a[i][k] = PolyT.zero()
        prev_pivot = pivot
    return minors


# ─── Rational matrices ───────────────────────────────────────────────────────


def det_rational(rows: RationalRows) -> Fraction:
    """Bareiss determinant of a rational matrix."""
    return det_exact(PolyMatrix.from_rows(rows))(0)


def rational_leading_minors(rows: RationalRows) -> list[Fraction]:
    """All leading principal minors from one elimination pass without pivoting.

    Pivot d_l equals minor_l / minor_{l−1}. After the first zero pivot the
    remaining minors are computed block by block.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    minors: list[Fraction] = []
    running = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            minors.extend(
                det_rational([row[: l] for row in rows[: l]]) for l in range(k + 1, n + 1)
            )
            return minors
        running *= pivot
        minors.append(running)
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor == 0:
                continue
            row_k = a[k]
            row_i = a[i]
            for j in range(k + 1, n):
                if row_k[j] != 0:
                    row_i[j] -= factor * row_k[j]
            row_i[k] = Fraction(0)
    return minors


def charpoly_exact(rows: RationalRows) -> PolyT:
    """Monic det(xI − A) by the Faddeev–LeVerrier recursion.

    M₀ = 0; Mⱼ = A·Mⱼ₋₁ + c_{n−j+1}·I; c_{n−j} = −tr(A·Mⱼ)/j.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m_prev = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, n + 1):
        am = _matmul(a, m_prev)
        c_next = coeffs[n - j + 1]
        m_j = [
            [am[r][c] + (c_next if r == c else 0) for c in range(n)] for r in range(n)
        ]
        a_mj = _matmul(a, m_j)
        trace = sum((a_mj[r][r] for r in range(n)), Fraction(0))
        coeffs[n - j] = -trace / j
        m_prev = m_j
    return PolyT(coeffs)


def _matmul(x: list[list[Fraction]], y: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(x)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k in range(n):
            xik = xi[k]
            if xik == 0:
                continue
            yk = y[k]
            for j in range(n):
                if yk[j] != 0:
                    oi[j] += xik * yk[j]
    return out


def nullspace_rational(rows: RationalRows, ncols: int) -> list[list[Fraction]]:
    """Exact null-space basis of a rational matrix via reduced row echelon form.

    ``ncols`` is explicit so that a matrix with zero rows still has a width.
    One basis vector per free column, with a 1 in that column.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[list[Fraction]] = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -a[row_idx][fc]
        basis.append(vec)
    return basis
