"""Exact and numeric spectral analysis of the Paneitz blocks."""

from .analysis import (
    bound_scan,
    bracket_min_eigenvalue,
    eigenvalues_numeric,
    face_agreement,
    interlacing_check,
    min_eigenvalue_vs_bracket,
    negative_count_exact,
    numeric_negative_count,
    parity_comparison,
    spectrum_report,
)
from .jacobi import jacobi_eigenvalues, off_diagonal_norm

__all__ = [
    "bound_scan",
    "bracket_min_eigenvalue",
    "eigenvalues_numeric",
    "face_agreement",
    "interlacing_check",
    "jacobi_eigenvalues",
    "min_eigenvalue_vs_bracket",
    "negative_count_exact",
    "numeric_negative_count",
    "off_diagonal_norm",
    "parity_comparison",
    "spectrum_report",
]
