"""
Spectral analysis of the Paneitz blocks 𝒫ₖ(t).

Exact side: the negative-eigenvalue count at rational t is certified from the
signs of the leading principal minors (Sylvester–Jacobi), falling back to a
Sturm count on the exact characteristic polynomial when some minor vanishes.

Numeric side: eigenvalues of the symmetric face by cyclic Jacobi. A numeric
count is called conclusive only when no eigenvalue lies within
``eig_rel_tol``·scale of zero, where scale = max |λ|.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from ..arith.matrix import charpoly_exact, rational_leading_minors
from ..arith.sturm import bracket_root, count_open_with_multiplicity
from ..errors import ArgumentError
from ..rossi import (
    THREE_T2,
    balancing_diagonal,
    build_balanced,
    build_symmetric,
    is_out_of_model,
)
from ..types import (
    CountCertificate,
    FaceComparison,
    InterlacingRecord,
    MinorSign,
    ParityComparison,
    ScanRow,
    SolverConfig,
    SpectrumReport,
    t_to_json,
)
from ..utils.format import log_debug
from .jacobi import jacobi_eigenvalues

TLike = Union[Fraction, float, int]


def _cfg(config: Optional[SolverConfig]) -> SolverConfig:
    return config if config is not None else SolverConfig()


def _sign(x: Fraction) -> MinorSign:
    return "+" if x > 0 else "-" if x < 0 else "0"


def _scale(values: Sequence[float]) -> float:
    return max((abs(v) for v in values), default=0.0) or 1.0


# ─── Numeric eigenvalues ─────────────────────────────────────────────────────


def eigenvalues_numeric(k: int, t: TLike, config: Optional[SolverConfig] = None) -> list[float]:
    """All k eigenvalues of the symmetric face at float(t), ascending."""
    cfg = _cfg(config)
    m = build_symmetric(k).evaluate(float(t))
    return jacobi_eigenvalues(m, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)


def numeric_negative_count(eigenvalues: Sequence[float], rel_tol: float) -> tuple[int, bool]:
    """(count of λ < −tol, conclusive) with tol = rel_tol·max |λ|."""
    tol = rel_tol * _scale(eigenvalues)
    count = sum(1 for v in eigenvalues if v < -tol)
    conclusive = all(abs(v) > tol for v in eigenvalues)
    return count, conclusive


# ─── Exact certification ─────────────────────────────────────────────────────


def _balanced_at(k: int, t: Fraction) -> list[list[Fraction]]:
    return build_balanced(k).evaluate(t)


def negative_count_exact(k: int, t: TLike) -> CountCertificate:
    """Certified number of negative eigenvalues of 𝒫ₖ(t) at rational t.

    Leading minors of the balanced face equal those of the symmetric face, so
    with every minor nonzero the count is the number of sign changes along
    (1, η₁, …, ηₖ). Otherwise the negative roots of det(xI − 𝒫ₖ(t)) are
    counted with multiplicity by Sturm sequences.
    """
    if isinstance(t, float):
        raise ArgumentError("exact certification needs a rational t (use 'p/q' or --exact)")
    x = Fraction(t)
    rows = _balanced_at(k, x)
    minors = rational_leading_minors(rows)
    signs = [_sign(m) for m in minors]
    if x == 0:
        count = sum(1 for i in range(k) if rows[i][i] < 0)
        return CountCertificate(count=count, method="diagonal", minor_signs=signs)
    if all(s != "0" for s in signs):
        chain = ["+"] + signs
        count = sum(1 for a, b in zip(chain, chain[1:]) if a != b)
        log_debug(f"k={k}, t={x}: minor signs {''.join(signs)} → {count} negative")
        return CountCertificate(count=count, method="minors", minor_signs=signs)
    char = charpoly_exact(rows)
    count = count_open_with_multiplicity(char, -math.inf, 0)
    log_debug(f"k={k}, t={x}: zero minor, Sturm fallback → {count} negative")
    return CountCertificate(count=count, method="sturm", minor_signs=signs)


def bracket_min_eigenvalue(
    k: int, t: TLike, rel_tol: Fraction = Fraction(1, 10**12)
) -> Optional[tuple[Fraction, Fraction]]:
    """Exact bracket (a, b] of the smallest negative eigenvalue; None if there is none."""
    x = Fraction(t)
    char = charpoly_exact(_balanced_at(k, x))
    if count_open_with_multiplicity(char, -math.inf, 0) == 0:
        return None
    return bracket_root(char, None, Fraction(0), rel_tol=rel_tol)


# ─── Reports ─────────────────────────────────────────────────────────────────


def spectrum_report(k: int, t: TLike, config: Optional[SolverConfig] = None) -> SpectrumReport:
    """Numeric spectrum plus, for rational t, the certified negative count."""
    cfg = _cfg(config)
    eigs = eigenvalues_numeric(k, t, cfg)
    count_num, conclusive = numeric_negative_count(eigs, cfg.eig_rel_tol)
    bound = -float(THREE_T2(float(t)))
    min_eig = eigs[0]
    notes: list[str] = []

    cert: Optional[CountCertificate] = None
    if isinstance(t, (Fraction, int)):
        cert = negative_count_exact(k, t)
        if conclusive and cert.count != count_num:
            notes.append(
                f"numeric count {count_num} disagrees with certified count {cert.count}"
            )
    degenerate = t == 0
    if degenerate:
        notes.append("t = 0: the block is diagonal (embeddable limit); the count is read from the diagonal")
    if is_out_of_model(t):
        notes.append("|t| ≥ 1 lies outside the Rossi family")
    if not conclusive:
        notes.append("an eigenvalue lies within tolerance of 0; numeric count is inconclusive")

    return SpectrumReport(
        k=k,
        t=t_to_json(Fraction(t)) if isinstance(t, int) else t_to_json(t),
        eigenvalues=eigs,
        min_eigenvalue=min_eig,
        negative_count_exact=cert.count if cert else None,
        certification=cert.method if cert else None,
        minor_signs=cert.minor_signs if cert else [],
        negative_count_numeric=count_num,
        count_conclusive=conclusive,
        bound=bound,
        bound_check=min_eig >= bound - cfg.bound_tol,
        out_of_model=is_out_of_model(t),
        degenerate=degenerate,
        notes=notes,
    )


def interlacing_check(k: int, t: TLike, config: Optional[SolverConfig] = None) -> list[InterlacingRecord]:
    """Cauchy interlacing between consecutive leading blocks, l = 1..k−1."""
    if k < 2:
        raise ArgumentError(f"interlacing needs k ≥ 2, got {k}")
    cfg = _cfg(config)
    m = build_symmetric(k).evaluate(float(t))
    spectra = [
        jacobi_eigenvalues(m[:l, :l], tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)
        for l in range(1, k + 1)
    ]
    records = []
    for l in range(1, k):
        inner, outer = spectra[l - 1], spectra[l]
        tol = cfg.interlace_tol * _scale(outer)
        violation = 0.0
        for i, lam in enumerate(inner):
            violation = max(violation, outer[i] - lam, lam - outer[i + 1])
        records.append(
            InterlacingRecord(
                l=l,
                inner=inner,
                outer=outer,
                max_violation=max(violation, 0.0),
                passed=violation <= tol,
            )
        )
    return records


def face_agreement(k: int, t: TLike, config: Optional[SolverConfig] = None) -> FaceComparison:
    """Symmetric-face eigenvalues against those of D·B·D⁻¹ built from the balanced face.

    D·B·D⁻¹ must itself be symmetric; a wrong balanced entry shows up as asymmetry.
    """
    cfg = _cfg(config)
    x = float(t)
    sym = eigenvalues_numeric(k, x, cfg)
    b = build_balanced(k).evaluate_float(x)
    d = np.array(balancing_diagonal(k))
    similar = (d[:, None] * b) / d[None, :]
    asymmetry = float(np.max(np.abs(similar - similar.T))) / (float(np.max(np.abs(similar))) or 1.0)
    similar = 0.5 * (similar + similar.T)
    bal = jacobi_eigenvalues(similar, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)
    scale = _scale(sym)
    diff = max((abs(u - v) for u, v in zip(sym, bal)), default=0.0) / scale
    return FaceComparison(
        k=k,
        t=x,
        symmetric=sym,
        balanced=bal,
        max_rel_diff=diff,
        max_asymmetry=asymmetry,
        agree=diff <= 1e-9 and asymmetry <= 1e-9,
    )


def parity_comparison(k: int, t: TLike, config: Optional[SolverConfig] = None) -> ParityComparison:
    """Spectrum at t against the spectrum at −t; reported, not asserted."""
    cfg = _cfg(config)
    x = float(t)
    plus = eigenvalues_numeric(k, x, cfg)
    minus = eigenvalues_numeric(k, -x, cfg)
    diff = max((abs(u - v) for u, v in zip(plus, minus)), default=0.0) / _scale(plus)
    return ParityComparison(
        k=k, t=x, plus=plus, minus=minus, max_rel_diff=diff, even=diff <= cfg.eig_rel_tol
    )


# ─── Lower-bound scan ────────────────────────────────────────────────────────


def _scan_cell(cell: tuple[int, Fraction], config: SolverConfig) -> ScanRow:
    k, t = cell
    x = float(t)
    min_eig = eigenvalues_numeric(k, x, config)[0]
    bound = -float(THREE_T2(x))
    return ScanRow(
        k=k,
        t=x,
        min_eigenvalue=min_eig,
        bound=bound,
        margin=min_eig - bound,
        passed=min_eig >= bound - config.bound_tol,
    )


def bound_scan(
    k_max: int,
    t_grid: Iterable[TLike],
    jobs: int = 1,
    config: Optional[SolverConfig] = None,
) -> list[ScanRow]:
    """Minimum eigenvalue against −3t² for every k ≤ k_max and t in the grid.

    Rows come back sorted by (k, t) whatever the worker count.
    """
    cfg = _cfg(config)
    grid = [Fraction(t) for t in t_grid]
    cells = [(k, t) for k in range(1, k_max + 1) for t in grid]
    work = partial(_scan_cell, config=cfg)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(work, cells, chunksize=max(1, len(cells) // (4 * jobs))))
    else:
        rows = [work(cell) for cell in cells]
    return sorted(rows, key=lambda r: (r.k, r.t))


def min_eigenvalue_vs_bracket(k: int, t: TLike, config: Optional[SolverConfig] = None) -> dict:
    """Numeric minimum eigenvalue next to its exact Sturm bracket."""
    cfg = _cfg(config)
    eigs = eigenvalues_numeric(k, t, cfg)
    bracket = bracket_min_eigenvalue(k, t)
    if bracket is None:
        return {"numeric": eigs[0], "bracket": None, "agree": eigs[0] >= -cfg.eig_rel_tol * _scale(eigs)}
    a, b = bracket
    mid = float((a + b) / 2)
    tol = cfg.eig_rel_tol * _scale(eigs)
    return {"numeric": eigs[0], "bracket": (float(a), float(b)), "agree": abs(eigs[0] - mid) <= tol}

