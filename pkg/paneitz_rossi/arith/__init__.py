"""Exact arithmetic: rationals, Gaussian rationals, ℚ[t], polynomial matrices, Sturm counts."""

from .matrix import (
    PolyMatrix,
    charpoly_exact,
    det_exact,
    det_rational,
    leading_minors,
    nullspace_rational,
    rational_leading_minors,
)
from .poly import PolyT, factor_t2_one_minus_t2, format_factored, poly_arith
from .rational import (
    GaussianRational,
    Rational,
    format_rational,
    parse_decimal_exact,
    parse_rational,
)
from .sturm import (
    bracket_root,
    count_open,
    count_open_with_multiplicity,
    root_multiplicities,
    sturm_count,
)

__all__ = [
    "GaussianRational",
    "PolyMatrix",
    "PolyT",
    "Rational",
    "bracket_root",
    "charpoly_exact",
    "count_open",
    "count_open_with_multiplicity",
    "det_exact",
    "det_rational",
    "factor_t2_one_minus_t2",
    "format_factored",
    "format_rational",
    "leading_minors",
    "nullspace_rational",
    "parse_decimal_exact",
    "parse_rational",
    "poly_arith",
    "rational_leading_minors",
    "root_multiplicities",
    "sturm_count",
]
