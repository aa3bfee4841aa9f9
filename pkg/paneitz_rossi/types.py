"""
Type definitions for paneitz-rossi.
Every value that crosses the library/CLI boundary is a Pydantic model.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from .arith.rational import (
    format_rational,
    is_decimal_literal,
    is_rational_literal,
    parse_decimal_exact,
    parse_rational,
)

# ─── Logging ─────────────────────────────────────────────────────────────────

LogLevel = Literal["silent", "errors", "info", "debug"]

# ─── Solver Config ───────────────────────────────────────────────────────────


class SolverConfig(BaseModel):
    """Global numeric tolerances and run-time switches."""

    jacobi_tol: float = Field(default=1e-12, gt=0)
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    eig_rel_tol: float = Field(default=1e-8, gt=0)
    interlace_tol: float = Field(default=1e-8, gt=0)
    bound_tol: float = Field(default=1e-9, ge=0)
    log_level: LogLevel = "info"
    verbose: bool = False
    jobs: int = Field(default=1, ge=1)


# ─── Run Config ──────────────────────────────────────────────────────────────

CommandName = Literal["matrix", "spectrum", "detshift", "verify-paper", "oracle-check", "scan"]
OutputFormat = Literal["json", "csv", "text"]

TValue = Union[Fraction, float]


def parse_t(text: str, exact: bool = False) -> TValue:
    """Parse "p/q" or an integer as a Fraction, a decimal as a float unless ``exact``."""
    if is_rational_literal(text):
        return parse_rational(text)
    if is_decimal_literal(text):
        if exact or ("." not in text and "e" not in text.lower()):
            return parse_decimal_exact(text)
        return float(text)
    raise ValueError(f"t must be 'p/q' or a decimal, got {text!r}")


def t_to_json(t: TValue) -> Union[str, float]:
    return format_rational(t) if isinstance(t, Fraction) else float(t)


class RunConfig(BaseModel):
    """Validated command-line invocation."""

    command: CommandName
    k: Optional[int] = Field(default=None, ge=1)
    k_max: Optional[int] = Field(default=None, ge=1)
    t: Optional[str] = None
    shift: str = "3t2"
    t_grid: Optional[str] = None
    output_format: OutputFormat = "json"
    output_path: Optional[str] = None
    exact: bool = False
    jobs: int = Field(default=1, ge=1)

    @field_validator("t")
    @classmethod
    def _check_t(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_t(value)
        return value

    @model_validator(mode="after")
    def _check_required(self) -> "RunConfig":
        if self.command in ("matrix", "spectrum", "detshift", "oracle-check") and self.k is None:
            raise ValueError(f"{self.command} requires --k")
        if self.command == "spectrum" and self.t is None:
            raise ValueError("spectrum requires --t")
        if self.command == "scan" and (self.k_max is None or self.t_grid is None):
            raise ValueError("scan requires --k-max and --t-grid")
        return self

    def t_value(self) -> Optional[TValue]:
        return None if self.t is None else parse_t(self.t, exact=self.exact)


# ─── Spectrum ────────────────────────────────────────────────────────────────

MinorSign = Literal["+", "-", "0"]


class CountCertificate(BaseModel):
    """Exact negative-eigenvalue count and how it was certified."""

    count: int = Field(ge=0)
    method: Literal["minors", "sturm", "diagonal"]
    minor_signs: List[MinorSign] = Field(default_factory=list)


class SpectrumReport(BaseModel):
    """Everything known about the spectrum of one block at one t."""

    k: int = Field(ge=1)
    t: Union[str, float]
    eigenvalues: List[float]
    min_eigenvalue: float
    negative_count_exact: Optional[int] = None
    certification: Optional[Literal["minors", "sturm", "diagonal"]] = None
    minor_signs: List[MinorSign] = Field(default_factory=list)
    negative_count_numeric: int
    count_conclusive: bool
    bound: float
    bound_check: bool
    out_of_model: bool = False
    degenerate: bool = False
    notes: List[str] = Field(default_factory=list)


class InterlacingRecord(BaseModel):
    """Eigenvalues of the l- and (l+1)-leading blocks and whether they interlace."""

    l: int = Field(ge=1)
    inner: List[float]
    outer: List[float]
    max_violation: float = 0.0
    passed: bool


class ScanRow(BaseModel):
    """One (k, t) cell of the −3t² lower-bound scan."""

    k: int = Field(ge=1)
    t: float
    min_eigenvalue: float
    bound: float
    margin: float
    passed: bool


class FaceComparison(BaseModel):
    k: int
    t: float
    symmetric: List[float]
    balanced: List[float]
    max_rel_diff: float
    max_asymmetry: float = 0.0
    agree: bool


class ParityComparison(BaseModel):
    k: int
    t: float
    plus: List[float]
    minus: List[float]
    max_rel_diff: float
    even: bool


# ─── Verification Ledger ─────────────────────────────────────────────────────


class VerifyCheck(BaseModel):
    """A named check; ``gating`` checks decide the exit code."""

    name: str
    status: Literal["pass", "fail"]
    gating: bool = True
    detail: str = ""
    witness: Dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: int = 0


class VerifyLedger(BaseModel):
    checks: List[VerifyCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks if c.gating)

    def failures(self) -> List[VerifyCheck]:
        return [c for c in self.checks if c.gating and c.status == "fail"]


# ─── Command Result ──────────────────────────────────────────────────────────


class CommandResult(BaseModel):
    """What the command engine hands back to the CLI: an exit code and a payload."""

    exit_code: Literal[0, 1, 2]
    payload: Any = None
    text: str = ""
    message: str = ""
