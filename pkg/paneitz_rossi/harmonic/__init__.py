"""Exact calculus on S³ harmonics: an independent path to the Paneitz blocks."""

from .chain import ChainBasis, basis_Hpq, bidegree_monomials, chain_basis, oracle_matrix
from .operators import (
    GENERATORS,
    OperatorWord,
    TCombination,
    apply_box_b,
    apply_box_b_bar,
    apply_calP,
    apply_T,
    apply_word,
    apply_Z1,
    apply_Z1bar,
    calp_word,
    kohn_bar_word,
    kohn_word,
    q_word,
)
from .poly import HarmonicPoly, laplacian, norm_squared, sphere_inner_product

__all__ = [
    "GENERATORS",
    "ChainBasis",
    "HarmonicPoly",
    "OperatorWord",
    "TCombination",
    "apply_T",
    "apply_Z1",
    "apply_Z1bar",
    "apply_box_b",
    "apply_box_b_bar",
    "apply_calP",
    "apply_word",
    "basis_Hpq",
    "bidegree_monomials",
    "calp_word",
    "chain_basis",
    "kohn_bar_word",
    "kohn_word",
    "laplacian",
    "norm_squared",
    "oracle_matrix",
    "q_word",
    "sphere_inner_product",
]
