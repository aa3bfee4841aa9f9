"""
paneitz-rossi command-line entry point.

Usage:
    paneitz-rossi matrix --k 3 --format json
    paneitz-rossi spectrum --k 4 --t 1/2
    paneitz-rossi detshift --k 3 --shift 3t2 --format text
    paneitz-rossi verify-paper --k-max 6
    paneitz-rossi oracle-check --k 3
    paneitz-rossi scan --k-max 10 --t-grid 0.05:0.95:0.05 --format csv --jobs 4

Exit codes: 0 success, 1 a verification/consistency/convergence failure,
2 a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .core import execute_command, update_config
from .utils.format import format_error


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", dest="output_path", help="write the result here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    common.add_argument("--verbose", action="store_true", help="progress and summaries on stderr")
    common.add_argument(
        "--log-level",
        choices=["silent", "errors", "info", "debug"],
        default=None,
        help="stderr diagnostics (default: PANEITZ_ROSSI_LOG_LEVEL or info)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="paneitz-rossi",
        description="CR Paneitz operator blocks on the Rossi sphere: exact forms and spectra.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", parents=[common], help="both faces of the block P_k(t)")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues and certified negative count")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", required=True, help="'p/q' or a decimal, either sign (e.g. -1/2)")
    p.add_argument("--exact", action="store_true", help="read a decimal --t as an exact rational")

    p = sub.add_parser("detshift", parents=[common], help="det(P_k(t) + shift(t)·I)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shift", default="3t2")

    p = sub.add_parser("verify-paper", parents=[common], help="run the verification ledger")
    p.add_argument("--k-max", type=int, default=None, help="lower every block-size cap to this")

    p = sub.add_parser("oracle-check", parents=[common], help="compare the harmonic expansion with the closed form")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("scan", parents=[common], help="minimum eigenvalue against −3t² on a grid")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--t-grid", required=True, help="start:stop:step, stop inclusive; start may be negative")

    return parser


_SIGNED_VALUE_OPTIONS = ("--t", "--t-grid")


def _attach_signed_values(argv: Sequence[str]) -> list[str]:
    """Join "--t -1/2" into "--t=-1/2"; argparse reads a leading "-" as an option."""
    out: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in _SIGNED_VALUE_OPTIONS:
            value = next(tokens, None)
            if value is not None and not value.startswith("--"):
                out.append(f"{token}={value}")
                continue
            out.append(token)
            if value is not None:
                out.append(value)
            continue
        out.append(token)
    return out


def _write(text: str, output_path: Optional[str]) -> None:
    if output_path:
        Path(output_path).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_signed_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    settings: dict = {"verbose": args.verbose}
    if args.log_level is not None:
        settings["log_level"] = args.log_level
    update_config(settings)

    run = {
        key: value
        for key, value in vars(args).items()
        if key in ("command", "k", "k_max", "t", "shift", "t_grid", "output_format", "output_path", "exact", "jobs")
    }
    result = execute_command(run)
    if result.text:
        try:
            _write(result.text, run.get("output_path"))
        except OSError as exc:
            format_error(exc, verbose=args.verbose)
            return 2
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
