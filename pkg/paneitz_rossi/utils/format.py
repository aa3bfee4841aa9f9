"""
Console formatting: rich diagnostics on standard error.
Uses the 'rich' library for spinners, colors, and the ledger tree.

Data never goes through this module: payloads are written to standard output
or --output by the CLI. When verbose=False (default) diagnostics are one-liners;
when verbose=True they carry the [PANEITZ] prefix, tree structure and timings.
"""

from __future__ import annotations

import os
from typing import Optional

from rich.console import Console
from rich.live import Live
from rich.markup import escape
from rich.spinner import Spinner

from ..types import LogLevel, ScanRow, SpectrumReport, VerifyLedger

_console = Console(stderr=True)
_LOG_LEVELS: list[LogLevel] = ["silent", "errors", "info", "debug"]


def _initial_level() -> LogLevel:
    env = os.environ.get("PANEITZ_ROSSI_LOG_LEVEL", "info")
    return env if env in _LOG_LEVELS else "info"  # type: ignore[return-value]


_current_log_level: LogLevel = _initial_level()

_PREFIX = "[dim]\\[PANEITZ][/dim]"


def set_log_level(level: LogLevel) -> None:
    global _current_log_level
    _current_log_level = level


def get_log_level() -> LogLevel:
    return _current_log_level


def _should_log(level: LogLevel) -> bool:
    return _LOG_LEVELS.index(_current_log_level) >= _LOG_LEVELS.index(level)


# ─── Spinner Management ──────────────────────────────────────────────────────


class SpinnerHandle:
    """Wraps a Rich Live spinner so we can start/stop it."""

    def __init__(self, live: Live, text: str) -> None:
        self._live = live
        self._text = text

    def stop(self, success: bool) -> None:
        self._live.stop()
        icon = "[green]✓[/green]" if success else "[red]✗[/red]"
        _console.print(f"{_PREFIX} {icon} {self._text}")


def start_spinner(text: str, verbose: bool = False) -> Optional[SpinnerHandle]:
    if not _should_log("info") or not verbose:
        return None
    live = Live(Spinner("dots", text=text), console=_console, transient=True)
    live.start()
    return SpinnerHandle(live, text)


def stop_spinner(spinner: Optional[SpinnerHandle], success: bool) -> None:
    if spinner is not None:
        spinner.stop(success)


# ─── Ledger ──────────────────────────────────────────────────────────────────


def format_ledger(ledger: VerifyLedger, verbose: bool = False) -> None:
    if not _should_log("info"):
        return

    if not verbose:
        failed = ledger.failures()
        total = sum(1 for c in ledger.checks if c.gating)
        if failed:
            _console.print(f"verify-paper: {len(failed)} of {total} checks failed")
            for check in failed:
                _console.print(f"  ✗ {escape(check.name)}: {escape(check.detail)}")
        else:
            _console.print(f"verify-paper: all {total} checks passed")
        return

    status_icon = "[green]✓[/green]" if ledger.passed else "[red]✗[/red]"
    _console.print()
    _console.print(f"{_PREFIX} {status_icon} [bold]Verification ledger[/bold]")
    for idx, check in enumerate(ledger.checks):
        branch = "└─" if idx == len(ledger.checks) - 1 else "├─"
        if check.status == "pass":
            icon = "[green]✓[/green]"
        elif check.gating:
            icon = "[red]✗[/red]"
        else:
            icon = "[yellow]⚠[/yellow]"
        gate = "" if check.gating else " [dim](exploratory)[/dim]"
        timing = f"[dim]{check.elapsed_ms}ms[/dim]"
        _console.print(f"{_PREFIX} {branch} {icon} {escape(check.name)}{gate} | {timing}")
        if check.detail:
            pipe = "  " if idx == len(ledger.checks) - 1 else "│ "
            _console.print(f"{_PREFIX} {pipe}   [dim]{escape(check.detail)}[/dim]")
    _console.print()


# ─── Report Summaries ────────────────────────────────────────────────────────


def format_spectrum_summary(report: SpectrumReport, verbose: bool = False) -> None:
    if not _should_log("info") or not verbose:
        return
    _console.print(f"{_PREFIX} [bold]𝒫_{report.k}({report.t})[/bold]")
    _console.print(f"{_PREFIX} ├─ [dim]min eigenvalue:[/dim] {report.min_eigenvalue:.12g}")
    if report.negative_count_exact is not None:
        _console.print(
            f"{_PREFIX} ├─ [dim]negative (exact, {report.certification}):[/dim] "
            f"{report.negative_count_exact}"
        )
    conclusive = "" if report.count_conclusive else " [yellow](inconclusive)[/yellow]"
    _console.print(
        f"{_PREFIX} └─ [dim]negative (numeric):[/dim] {report.negative_count_numeric}{conclusive}"
    )


def format_scan_summary(rows: list[ScanRow], verbose: bool = False) -> None:
    if not _should_log("info"):
        return
    violations = [r for r in rows if not r.passed]
    if violations:
        worst = min(violations, key=lambda r: r.margin)
        _console.print(
            f"[yellow]⚠ −3t² bound violated in {len(violations)} of {len(rows)} cells[/yellow] "
            f"(worst k={worst.k}, t={worst.t:g}, margin={worst.margin:.3g})"
        )
    elif verbose:
        _console.print(f"{_PREFIX} [green]✓[/green] −3t² bound held in all {len(rows)} cells")


# ─── Warnings & Errors ───────────────────────────────────────────────────────


def format_warning(message: str, verbose: bool = False) -> None:
    if not _should_log("errors"):
        return
    if not verbose:
        _console.print(f"Warning: {escape(message)}")
        return
    _console.print(f"{_PREFIX} [yellow]⚠ {escape(message)}[/yellow]")


def format_error(error: Exception | str, verbose: bool = False) -> None:
    if not _should_log("errors"):
        return

    if not verbose:
        _console.print(f"Error: {escape(str(error))}")
        return

    _console.print()
    _console.print(f"{_PREFIX} [red]Error:[/red] {escape(str(error))}")
    if _should_log("debug") and isinstance(error, BaseException):
        import traceback

        tb = "".join(traceback.format_exception(type(error), error, error.__traceback__))
        _console.print(f"{_PREFIX} [dim]{escape(tb)}[/dim]")
    _console.print()


# ─── Debug logging ───────────────────────────────────────────────────────────


def log_debug(message: str) -> None:
    if not _should_log("debug"):
        return
    _console.print(f"[dim]\\[PANEITZ DEBUG][/dim] [dim]{escape(message)}[/dim]")
