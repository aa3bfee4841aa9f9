"""
Sturm sequences: exact counting and bracketing of distinct real roots.

The number of distinct real roots of p in (a, b] is V(a) − V(b), where V(x)
counts sign changes along p₀ = p, p₁ = p′, pᵢ₊₁ = −rem(pᵢ₋₁, pᵢ). The input is
reduced to its squarefree part first, so multiple roots count once.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from .poly import PolyT

Endpoint = Union[int, Fraction, float]


def sturm_sequence(p: PolyT) -> list[PolyT]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_at(p: PolyT, x: Endpoint) -> int:
    if isinstance(x, float) and math.isinf(x):
        lead = (p.leading > 0) - (p.leading < 0)
        if x > 0 or p.degree % 2 == 0:
            return lead
        return -lead
    return p.sign_at(Fraction(x))


def sign_variations(seq: list[PolyT], x: Endpoint) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _reduced_sequence(p: PolyT) -> list[PolyT]:
    q = p.squarefree()
    return sturm_sequence(q) if q.degree > 0 else []


def sturm_count(p: PolyT, a: Endpoint = -math.inf, b: Endpoint = math.inf) -> int:
    """Number of distinct real roots of p in (a, b]; ±math.inf are accepted as endpoints."""
    seq = _reduced_sequence(p)
    if not seq:
        return 0
    return sign_variations(seq, a) - sign_variations(seq, b)


def count_open(p: PolyT, a: Endpoint, b: Endpoint) -> int:
    """Distinct real roots in the open interval (a, b)."""
    count = sturm_count(p, a, b)
    if not (isinstance(b, float) and math.isinf(b)) and not p.is_zero() and p(Fraction(b)) == 0:
        count -= 1
    return count


def count_open_with_multiplicity(p: PolyT, a: Endpoint, b: Endpoint) -> int:
    """Real roots in (a, b) counted with multiplicity.

    A root of multiplicity m survives in the first m links of the chain
    p, gcd(p, p′), gcd(that, its derivative), …
    """
    total = 0
    current = p
    while current.degree > 0:
        total += count_open(current, a, b)
        current = current.gcd(current.derivative())
    return total


def root_multiplicities(p: PolyT) -> dict[int, int]:
    """Map multiplicity → number of distinct real roots having it.

    Uses the chain p, gcd(p, p′), gcd(that, its derivative), …; the squarefree
    part of each link holds the roots of multiplicity ≥ j.
    """
    out: dict[int, int] = {}
    current = p
    counts: list[int] = []
    while current.degree > 0:
        counts.append(sturm_count(current))
        current = current.gcd(current.derivative())
    for j, c in enumerate(counts, start=1):
        higher = counts[j] if j < len(counts) else 0
        if c - higher:
            out[j] = c - higher
    return out


def cauchy_bound(p: PolyT) -> Fraction:
    """Every real root r satisfies |r| < 1 + max |aᵢ / aₙ|."""
    lead = p.leading
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def bracket_root(
    p: PolyT,
    lo: Optional[Fraction] = None,
    hi: Optional[Fraction] = None,
    rel_tol: Fraction = Fraction(1, 10**12),
    max_steps: int = 400,
) -> Optional[tuple[Fraction, Fraction]]:
    """Bisect (lo, hi] down to the smallest root it contains.

    Returns a bracket (a, b] holding exactly that root with
    b − a ≤ rel_tol·max(|a|, |b|), or None if (lo, hi] holds no root.
    """
    bound = cauchy_bound(p)
    a = -bound if lo is None else Fraction(lo)
    b = bound if hi is None else Fraction(hi)
    seq = _reduced_sequence(p)
    if not seq or sign_variations(seq, a) == sign_variations(seq, b):
        return None
    for _ in range(max_steps):
        if b - a <= rel_tol * max(abs(a), abs(b)):
            break
        mid = (a + b) / 2
        if sign_variations(seq, a) > sign_variations(seq, mid):
            b = mid
        else:
            a = mid
    return a, b
