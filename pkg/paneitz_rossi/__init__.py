"""
paneitz-rossi: CR Paneitz operator blocks on the Rossi sphere

Closed-form matrices of the Paneitz operator on each odd chain
ℋ_{2k−1,0} → … → ℋ_{1,2k−2}, their exact determinants and minors, and
certified plus numerical spectra.

Usage::

    from fractions import Fraction
    from paneitz_rossi import init, paneitz_block, spectrum_report, det_shifted, THREE_T2

    init(log_level="debug", jacobi_tol=1e-13)

    block = paneitz_block(3)              # both faces of P_3(t)
    det_shifted(3, THREE_T2)              # det(P_3(t) + 3t²I) in ℚ[t]

    report = spectrum_report(4, Fraction(1, 2))
    report.negative_count_exact           # 1, certified from minor signs

    # Independent check of the closed form from harmonic calculus
    from paneitz_rossi import oracle_matrix, build_balanced
    assert oracle_matrix(3) == build_balanced(3)
"""

from __future__ import annotations

__version__ = "0.3.0"

from typing import Any

from .core import DEFAULT_CONFIG, execute_command, get_config, update_config
from .errors import ArgumentError, ConsistencyError, ConvergenceError, PaneitzError
from .harmonic import chain_basis, oracle_matrix
from .rossi import (
    THREE_T2,
    band_coeff,
    build_balanced,
    build_symmetric,
    det_shifted,
    eta_closed_form,
    paneitz_block,
)
from .spectrum import bound_scan, negative_count_exact, spectrum_report
from .types import CommandResult, RunConfig, SolverConfig, SpectrumReport, VerifyLedger
from .verify import run_verification

# ─── Re-exports ──────────────────────────────────────────────────────────────

__all__ = [
    "init",
    "ArgumentError",
    "CommandResult",
    "ConsistencyError",
    "ConvergenceError",
    "DEFAULT_CONFIG",
    "PaneitzError",
    "RunConfig",
    "SolverConfig",
    "SpectrumReport",
    "THREE_T2",
    "VerifyLedger",
    "band_coeff",
    "bound_scan",
    "build_balanced",
    "build_symmetric",
    "chain_basis",
    "det_shifted",
    "eta_closed_form",
    "execute_command",
    "get_config",
    "negative_count_exact",
    "oracle_matrix",
    "paneitz_block",
    "run_verification",
    "spectrum_report",
]


# ─── Init ────────────────────────────────────────────────────────────────────


def init(**kwargs: Any) -> None:
    """Adjust the global solver configuration.

    Example::

        init(jacobi_tol=1e-13, jacobi_max_sweeps=200, log_level="debug")
    """
    update_config(**kwargs)
