"""
Core engine: global solver config and the command dispatcher behind the CLI.

Every command returns a CommandResult instead of raising: argument problems
become exit code 2, failed identities or numeric breakdowns exit code 1.
"""

from __future__ import annotations

import re
from copy import deepcopy
from fractions import Fraction
from typing import Any, Callable

from pydantic import ValidationError

from .arith.matrix import PolyMatrix
from .arith.poly import PolyT, format_factored
from .arith.rational import format_rational, parse_decimal_exact, parse_rational
from .errors import ArgumentError, ConsistencyError, ConvergenceError, PaneitzError
from .harmonic import oracle_matrix
from .rossi import (
    KNOWN_SHIFTED_DETERMINANTS,
    THREE_T2,
    build_balanced,
    det_shifted,
    is_out_of_model,
    known_shifted_determinant,
    paneitz_block,
)
from .spectrum import bound_scan, spectrum_report
from .types import CommandResult, RunConfig, SolverConfig, SpectrumReport
from .utils.format import (
    format_error,
    format_ledger,
    format_scan_summary,
    format_spectrum_summary,
    format_warning,
    log_debug,
    set_log_level,
    start_spinner,
    stop_spinner,
)
from .utils.serialize import (
    band_matrix_to_csv,
    band_matrix_to_json,
    dumps_json,
    poly_matrix_to_json,
    poly_to_json,
    scan_to_csv,
    scan_to_json,
    spectrum_to_csv,
    to_csv,
)
from .verify import run_verification

# ─── Default Config ──────────────────────────────────────────────────────────

DEFAULT_CONFIG = SolverConfig()

# ─── Singleton State ─────────────────────────────────────────────────────────

_config: SolverConfig = deepcopy(DEFAULT_CONFIG)


def update_config(new_config: dict[str, Any] | None = None, **kwargs: Any) -> None:
    """Update the global configuration; values are re-validated by pydantic."""
    global _config

    merged = _config.model_dump()
    if new_config:
        merged.update(new_config)
    if kwargs:
        merged.update(kwargs)

    _config = SolverConfig(**merged)
    set_log_level(_config.log_level)


def get_config() -> SolverConfig:
    """Get the current config (for testing/inspection)."""
    return deepcopy(_config)


# ─── Input Parsing ───────────────────────────────────────────────────────────

_SHIFT_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)?\*?t(?:\^?(\d+))?$")


def parse_shift(text: str) -> PolyT:
    """Shift polynomial: "3t2", "3t^2", "-t", a rational constant, or ascending coefficients "0,0,3"."""
    source = text.replace(" ", "")
    if not source:
        raise ArgumentError("empty --shift")
    if "," in source:
        return PolyT(parse_rational(part) for part in source.split(","))
    match = _SHIFT_RE.match(source)
    if match:
        head, power = match.group(1), match.group(2)
        coeff = Fraction(1) if head in (None, "", "+") else parse_rational(head)
        return PolyT.monomial(int(power) if power else 1, coeff)
    if source in ("-t", "+t"):
        return PolyT.monomial(1, -1 if source[0] == "-" else 1)
    return PolyT.constant(parse_rational(source))


def parse_t_grid(text: str) -> list[Fraction]:
    """Parse "start:stop:step" with exact decimals; stop is inclusive and start > stop gives []."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ArgumentError(f"t-grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (parse_decimal_exact(p) for p in parts)
    except ArgumentError:
        start, stop, step = (parse_rational(p) for p in parts)
    if step <= 0:
        raise ArgumentError(f"t-grid step must be positive, got {format_rational(step)}")
    if start > stop:
        return []
    count = int((stop - start) // step)
    return [start + i * step for i in range(count + 1)]


# ─── Commands ────────────────────────────────────────────────────────────────


def _render(payload: Any, fmt: str, csv_text: Callable[[], str], text: Callable[[], str]) -> str:
    if fmt == "csv":
        return csv_text()
    if fmt == "text":
        return text()
    return dumps_json(payload)


def _poly_grid_text(m: PolyMatrix, label: str) -> str:
    lines = []
    for i in range(m.size):
        for j in range(m.size):
            if not m[i, j].is_zero():
                lines.append(f"{label}[{i + 1},{j + 1}] = {m[i, j]}")
    return "\n".join(lines) + "\n"


def _cmd_matrix(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    block = paneitz_block(run.k)
    payload = band_matrix_to_json(block)
    out = _render(
        payload,
        run.output_format,
        lambda: band_matrix_to_csv(block),
        lambda: _poly_grid_text(block.balanced, "B"),
    )
    return CommandResult(exit_code=0, payload=payload, text=out)


def _spectrum_text(report: SpectrumReport) -> str:
    lines = [f"k = {report.k}, t = {report.t}"]
    lines.append("eigenvalues: " + ", ".join(f"{v:.12g}" for v in report.eigenvalues))
    if report.negative_count_exact is not None:
        lines.append(
            f"negative eigenvalues (certified, {report.certification}): {report.negative_count_exact}"
        )
        if report.minor_signs:
            lines.append("leading minor signs: " + " ".join(report.minor_signs))
    lines.append(f"negative eigenvalues (numeric): {report.negative_count_numeric}")
    lines.append(f"min eigenvalue ≥ −3t²: {'yes' if report.bound_check else 'no'}")
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def _cmd_spectrum(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    t = run.t_value()
    report = spectrum_report(run.k, t, cfg)
    format_spectrum_summary(report, verbose=cfg.verbose)
    if report.out_of_model:
        format_warning(f"t = {report.t} is outside 0 < |t| < 1", verbose=cfg.verbose)
    payload = report.model_dump()
    out = _render(payload, run.output_format, lambda: spectrum_to_csv(report), lambda: _spectrum_text(report))
    return CommandResult(exit_code=0, payload=payload, text=out)


def _cmd_detshift(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    shift = parse_shift(run.shift)
    det = det_shifted(run.k, shift)
    published = None
    if shift == THREE_T2 and run.k in KNOWN_SHIFTED_DETERMINANTS:
        published = det == known_shifted_determinant(run.k)
    payload = {
        "k": run.k,
        "shift": poly_to_json(shift),
        "determinant": poly_to_json(det),
        "factored": format_factored(det),
        "even": det.is_even(),
        "matches_published": published,
    }
    out = _render(
        payload,
        run.output_format,
        lambda: to_csv(["power", "coefficient"], ([n, format_rational(c)] for n, c in enumerate(det.coeffs))),
        lambda: f"det(P_{run.k}(t) + ({shift})·I) = {format_factored(det)}\n",
    )
    exit_code = 1 if published is False else 0
    return CommandResult(exit_code=exit_code, payload=payload, text=out)


def _cmd_oracle_check(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    spinner = start_spinner(f"Expanding P(t) on the k = {run.k} chain", verbose=cfg.verbose)
    try:
        oracle = oracle_matrix(run.k)
    except ConsistencyError:
        stop_spinner(spinner, False)
        raise
    closed = build_balanced(run.k)
    mismatches = [
        {"i": i + 1, "j": j + 1, "oracle": poly_to_json(oracle[i, j]), "closed_form": poly_to_json(closed[i, j])}
        for i in range(run.k)
        for j in range(run.k)
        if oracle[i, j] != closed[i, j]
    ]
    stop_spinner(spinner, not mismatches)
    payload = {
        "k": run.k,
        "equal": not mismatches,
        "mismatches": mismatches,
        "oracle": poly_matrix_to_json(oracle),
    }
    out = _render(
        payload,
        run.output_format,
        lambda: to_csv(["i", "j", "oracle", "closed_form"], ([m["i"], m["j"], m["oracle"], m["closed_form"]] for m in mismatches)),
        lambda: ("oracle matches closed form\n" if not mismatches else _poly_grid_text(oracle, "oracle")),
    )
    return CommandResult(exit_code=0 if not mismatches else 1, payload=payload, text=out)


def _cmd_scan(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    grid = parse_t_grid(run.t_grid)
    if any(is_out_of_model(t) for t in grid):
        format_warning("t-grid reaches |t| ≥ 1, outside the Rossi family", verbose=cfg.verbose)
    spinner = start_spinner(f"Scanning k ≤ {run.k_max} over {len(grid)} values of t", verbose=cfg.verbose)
    rows = bound_scan(run.k_max, grid, jobs=run.jobs, config=cfg) if grid else []
    stop_spinner(spinner, True)
    format_scan_summary(rows, verbose=cfg.verbose)
    payload = scan_to_json(rows)
    out = _render(
        payload,
        run.output_format,
        lambda: scan_to_csv(rows),
        lambda: "".join(
            f"k={r.k:<3} t={r.t:<8g} min={r.min_eigenvalue:<16.10g} margin={r.margin:.3g}"
            f" {'pass' if r.passed else 'FAIL'}\n"
            for r in rows
        ),
    )
    return CommandResult(exit_code=0, payload=payload, text=out)


def _cmd_verify(run: RunConfig, cfg: SolverConfig) -> CommandResult:
    spinner = start_spinner("Running the verification ledger", verbose=cfg.verbose)
    ledger = run_verification(k_max=run.k_max, config=cfg, jobs=run.jobs)
    stop_spinner(spinner, ledger.passed)
    format_ledger(ledger, verbose=cfg.verbose)
    payload = {
        "passed": ledger.passed,
        "checks": [c.model_dump(exclude={"elapsed_ms"}) for c in ledger.checks],
    }
    out = _render(
        payload,
        run.output_format,
        lambda: to_csv(
            ["name", "status", "gating", "detail"],
            ([c.name, c.status, str(c.gating).lower(), c.detail] for c in ledger.checks),
        ),
        lambda: "".join(
            f"{'✓' if c.status == 'pass' else '✗'} {c.name}{'' if c.gating else ' (exploratory)'}: {c.detail}\n"
            for c in ledger.checks
        ),
    )
    return CommandResult(exit_code=0 if ledger.passed else 1, payload=payload, text=out)


_COMMANDS: dict[str, Callable[[RunConfig, SolverConfig], CommandResult]] = {
    "matrix": _cmd_matrix,
    "spectrum": _cmd_spectrum,
    "detshift": _cmd_detshift,
    "oracle-check": _cmd_oracle_check,
    "scan": _cmd_scan,
    "verify-paper": _cmd_verify,
}


# ─── Core Execution ──────────────────────────────────────────────────────────


def _create_error_result(exit_code: int, message: str) -> CommandResult:
    return CommandResult(exit_code=exit_code, payload=None, text="", message=message)


def execute_command(run: RunConfig | dict[str, Any]) -> CommandResult:
    """Validate and run one command. Never raises for domain errors."""
    cfg = get_config()
    try:
        if not isinstance(run, RunConfig):
            run = RunConfig(**run)
    except ValidationError as exc:
        format_error(exc, verbose=cfg.verbose)
        return _create_error_result(2, str(exc))

    if run.jobs > 1:
        cfg = cfg.model_copy(update={"jobs": run.jobs})
    log_debug(f"command={run.command} k={run.k} k_max={run.k_max} t={run.t} format={run.output_format}")

    try:
        return _COMMANDS[run.command](run, cfg)
    except ArgumentError as exc:
        format_error(exc, verbose=cfg.verbose)
        return _create_error_result(2, str(exc))
    except (ConsistencyError, ConvergenceError) as exc:
        format_error(exc, verbose=cfg.verbose)
        return _create_error_result(1, str(exc))
    except PaneitzError as exc:
        format_error(exc, verbose=cfg.verbose)
        return _create_error_result(1, str(exc))
