"""
Exception hierarchy for paneitz-rossi.

Library code raises these; the CLI engine turns them into exit codes
(2 for argument errors, 1 for consistency or convergence failures).
"""

from __future__ import annotations


class PaneitzError(Exception):
    """Base class for every error raised by the package."""


class ArgumentError(PaneitzError, ValueError):
    """An argument is outside the domain of an operation (k < 1, l out of range, bad t)."""


class ConsistencyError(PaneitzError):
    """An exact identity that must hold did not (inexact division, oracle non-membership)."""


class ConvergenceError(PaneitzError):
    """The Jacobi eigensolver exhausted its sweep cap."""
