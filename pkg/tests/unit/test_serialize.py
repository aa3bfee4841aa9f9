"""Tests for JSON and CSV payload codecs."""

import csv
import io
import json
from fractions import Fraction

import pytest

from paneitz_rossi.arith.poly import PolyT
from paneitz_rossi.errors import ArgumentError
from paneitz_rossi.rossi import paneitz_block
from paneitz_rossi.types import ScanRow
from paneitz_rossi.utils.serialize import (
    SCAN_HEADER,
    band_matrix_from_json,
    band_matrix_to_csv,
    band_matrix_to_json,
    coeff_from_json,
    coeff_to_json,
    dumps_json,
    poly_from_json,
    poly_to_json,
    scan_to_csv,
    scan_to_json,
    to_csv,
)


class TestCoefficients:
    def test_integers_stay_integers(self):
        assert coeff_to_json(Fraction(-36)) == -36

    def test_fractions_become_strings(self):
        assert coeff_to_json(Fraction(1, 3)) == "1/3"

    def test_decode(self):
        assert coeff_from_json(4) == 4
        assert coeff_from_json("-2/5") == Fraction(-2, 5)

    @pytest.mark.parametrize("value", [True, 1.5, None, "0.5"])
    def test_decode_rejects(self, value):
        with pytest.raises(ArgumentError):
            coeff_from_json(value)

    def test_poly_ascending(self):
        assert poly_to_json(PolyT((12, 0, 9, 0, 12))) == [12, 0, 9, 0, 12]
        assert poly_to_json(PolyT.zero()) == []

    def test_poly_decode(self):
        assert poly_from_json([0, "1/2"]) == PolyT((0, Fraction(1, 2)))


class TestBandMatrix:
    def test_k2_layout(self):
        data = band_matrix_to_json(paneitz_block(2))
        assert data["k"] == 2
        assert data["bandwidth"] == 2
        assert data["face"]["balanced"][0] == [[0, 0, 9], [0, -36, 0, -36]]
        assert data["face"]["symmetric"][0][1] == {"poly": [0, -3, 0, -3], "radicand": 12}

    def test_json_restores_block(self):
        block = paneitz_block(4)
        text = json.dumps(band_matrix_to_json(block))
        assert band_matrix_from_json(json.loads(text)) == block

    def test_malformed(self):
        with pytest.raises(ArgumentError):
            band_matrix_from_json({"k": 2})

    def test_csv_rows(self):
        text = band_matrix_to_csv(paneitz_block(3))
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["i", "j", "balanced", "symmetric_poly", "symmetric_radicand"]
        assert len(rows) == 1 + 9
        assert text.endswith("\r\n")


class TestTextAndCsv:
    def test_dumps_json_trailing_newline(self):
        assert dumps_json({"a": 1}) == '{\n  "a": 1\n}\n'

    def test_csv_quoting(self):
        assert to_csv(["a", "b"], [["x,y", 1]]) == 'a,b\r\n"x,y",1\r\n'

    def test_scan_codecs(self):
        rows = [ScanRow(k=1, t=0.5, min_eigenvalue=-0.75, bound=-0.75, margin=0.0, passed=True)]
        csv_text = scan_to_csv(rows)
        assert csv_text.splitlines()[0] == ",".join(SCAN_HEADER)
        assert csv_text.splitlines()[1] == "1,0.5,-0.75,-0.75,0.0,true"
        assert scan_to_json(rows) == [
            {"k": 1, "t": 0.5, "min_eigenvalue": -0.75, "bound": -0.75, "margin": 0.0, "pass": True}
        ]
