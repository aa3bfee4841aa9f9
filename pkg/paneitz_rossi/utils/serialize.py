"""
JSON and CSV codecs for command payloads.

Polynomials are ascending coefficient arrays; integer coefficients are JSON
integers and other rationals are "p/q" strings. CSV follows RFC 4180
(header row, CRLF line ends, quoting only where needed).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

from ..arith.matrix import PolyMatrix
from ..arith.poly import PolyT
from ..arith.rational import format_rational, parse_rational
from ..errors import ArgumentError
from ..rossi import BandMatrix, RadicalEntry, RadicalMatrix
from ..types import ScanRow, SpectrumReport

JsonCoeff = Union[int, str]


# ─── Polynomials ─────────────────────────────────────────────────────────────


def coeff_to_json(c: Fraction) -> JsonCoeff:
    return c.numerator if c.denominator == 1 else format_rational(c)


def coeff_from_json(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ArgumentError(f"boolean is not a coefficient: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ArgumentError(f"coefficient must be an integer or 'p/q' string, got {value!r}")


def poly_to_json(p: PolyT) -> list[JsonCoeff]:
    return [coeff_to_json(c) for c in p.coeffs]


def poly_from_json(values: Sequence[Any]) -> PolyT:
    return PolyT(coeff_from_json(v) for v in values)


def poly_matrix_to_json(m: PolyMatrix) -> list[list[list[JsonCoeff]]]:
    return [[poly_to_json(e) for e in row] for row in m.rows]


def poly_matrix_from_json(rows: Sequence[Sequence[Sequence[Any]]]) -> PolyMatrix:
    return PolyMatrix(tuple(tuple(poly_from_json(e) for e in row) for row in rows))


# ─── Band matrices ───────────────────────────────────────────────────────────


def band_matrix_to_json(block: BandMatrix) -> dict[str, Any]:
    return {
        "k": block.k,
        "bandwidth": block.bandwidth,
        "face": {
            "symmetric": [
                [{"poly": poly_to_json(e.poly), "radicand": e.radicand} for e in row]
                for row in block.symmetric.rows
            ],
            "balanced": poly_matrix_to_json(block.balanced),
        },
    }


def band_matrix_from_json(data: dict[str, Any]) -> BandMatrix:
    try:
        face = data["face"]
        symmetric = RadicalMatrix(
            tuple(
                tuple(RadicalEntry(poly_from_json(e["poly"]), int(e["radicand"])) for e in row)
                for row in face["symmetric"]
            )
        )
        balanced = poly_matrix_from_json(face["balanced"])
        return BandMatrix(
            k=int(data["k"]),
            symmetric=symmetric,
            balanced=balanced,
            bandwidth=int(data.get("bandwidth", 2)),
        )
    except (KeyError, TypeError) as exc:
        raise ArgumentError(f"malformed band-matrix JSON: {exc}") from exc


# ─── Text & CSV ──────────────────────────────────────────────────────────────


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def band_matrix_to_csv(block: BandMatrix) -> str:
    """One row per entry (i, j), 1-based, with both faces."""
    rows = []
    for i in range(block.k):
        for j in range(block.k):
            sym = block.symmetric[i, j]
            rows.append(
                [
                    i + 1,
                    j + 1,
                    json.dumps(poly_to_json(block.balanced[i, j])),
                    json.dumps(poly_to_json(sym.poly)),
                    sym.radicand,
                ]
            )
    return to_csv(["i", "j", "balanced", "symmetric_poly", "symmetric_radicand"], rows)


def spectrum_to_csv(report: SpectrumReport) -> str:
    rows = [[report.k, report.t, idx + 1, repr(v)] for idx, v in enumerate(report.eigenvalues)]
    return to_csv(["k", "t", "index", "eigenvalue"], rows)


SCAN_HEADER = ["k", "t", "min_eigenvalue", "bound", "margin", "pass"]


def scan_to_csv(rows: Sequence[ScanRow]) -> str:
    return to_csv(
        SCAN_HEADER,
        (
            [r.k, repr(r.t), repr(r.min_eigenvalue), repr(r.bound), repr(r.margin), str(r.passed).lower()]
            for r in rows
        ),
    )


def scan_to_json(rows: Sequence[ScanRow]) -> list[dict[str, Any]]:
    return [
        {
            "k": r.k,
            "t": r.t,
            "min_eigenvalue": r.min_eigenvalue,
            "bound": r.bound,
            "margin": r.margin,
            "pass": r.passed,
        }
        for r in rows
    ]
