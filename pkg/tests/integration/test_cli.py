"""Integration tests: the paneitz-rossi command line end to end, in process."""

import csv
import io
import json

import pytest

from paneitz_rossi import rossi
from paneitz_rossi.cli import main
from paneitz_rossi.core import update_config


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCommands:
    def setup_method(self):
        update_config(log_level="silent", verbose=False)

    def teardown_method(self):
        update_config(log_level="info", verbose=False)

    def test_matrix_json(self, capsys):
        code, out = run(capsys, "matrix", "--k", "2")
        assert code == 0
        data = json.loads(out)
        assert data["k"] == 2
        assert data["face"]["balanced"][1][1] == [12, 0, 9, 0, 12]

    def test_matrix_text(self, capsys):
        code, out = run(capsys, "matrix", "--k", "1", "--format", "text")
        assert code == 0
        assert out == "B[1,1] = -3t^2\n"

    def test_spectrum_rational_t_is_certified(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "3", "--t", "1/2")
        assert code == 0
        data = json.loads(out)
        assert data["negative_count_exact"] == 1
        assert data["certification"] == "minors"
        assert len(data["eigenvalues"]) == 3

    def test_spectrum_decimal_t_is_numeric_only(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "3", "--t", "0.5")
        assert code == 0
        assert json.loads(out)["negative_count_exact"] is None

    def test_spectrum_exact_flag(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "3", "--t", "0.5", "--exact")
        assert json.loads(out)["negative_count_exact"] == 1

    def test_spectrum_out_of_model_still_succeeds(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "2", "--t", "3/2")
        assert code == 0
        assert json.loads(out)["out_of_model"] is True

    def test_spectrum_csv(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "2", "--t", "1/2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["k", "t", "index", "eigenvalue"]
        assert [r[2] for r in rows[1:]] == ["1", "2"]

    def test_detshift_text(self, capsys):
        code, out = run(capsys, "detshift", "--k", "3", "--format", "text")
        assert code == 0
        assert "576 t^2 (1 - t^2)^2 (15 + 58t^2 + 15t^4)" in out

    def test_detshift_json(self, capsys):
        code, out = run(capsys, "detshift", "--k", "2")
        data = json.loads(out)
        assert data["matches_published"] is True
        assert data["determinant"] == [0, 0, 36, 0, -72, 0, 36]
        assert data["even"] is True

    def test_detshift_custom_shift(self, capsys):
        code, out = run(capsys, "detshift", "--k", "1", "--shift", "0,0,1")
        assert code == 0
        data = json.loads(out)
        assert data["matches_published"] is None
        assert data["determinant"] == [0, 0, -2]

    def test_oracle_check(self, capsys):
        code, out = run(capsys, "oracle-check", "--k", "3")
        assert code == 0
        data = json.loads(out)
        assert data["equal"] is True
        assert data["mismatches"] == []

    def test_scan_csv(self, capsys):
        code, out = run(capsys, "scan", "--k-max", "2", "--t-grid", "0.25:0.5:0.25", "--format", "csv")
        assert code == 0
        lines = out.split("\r\n")
        assert lines[0] == "k,t,min_eigenvalue,bound,margin,pass"
        assert len([line for line in lines[1:] if line]) == 4

    def test_spectrum_negative_rational_t(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "2", "--t", "-1/2")
        assert code == 0
        data = json.loads(out)
        assert data["negative_count_exact"] == 1
        assert data["certification"] == "minors"

    def test_spectrum_negative_t_equals_form(self, capsys):
        code, out = run(capsys, "spectrum", "--k", "2", "--t=-1/3")
        assert code == 0
        assert json.loads(out)["negative_count_exact"] == 1

    def test_scan_negative_grid_start(self, capsys):
        code, out = run(capsys, "scan", "--k-max", "1", "--t-grid", "-0.5:0.5:0.5")
        assert code == 0
        data = json.loads(out)
        assert [row["t"] for row in data] == [-0.5, 0.0, 0.5]
        assert all(row["pass"] for row in data)

    def test_scan_empty_grid(self, capsys):
        code, out = run(capsys, "scan", "--k-max", "2", "--t-grid", "0.5:0.1:0.1")
        assert code == 0
        assert json.loads(out) == []

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "b3.json"
        code, out = run(capsys, "matrix", "--k", "3", "--output", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["k"] == 3

    def test_verify_small(self, capsys):
        code, out = run(capsys, "verify-paper", "--k-max", "2")
        data = json.loads(out)
        assert code == 0
        assert data["passed"] is True
        assert all("elapsed_ms" not in c for c in data["checks"])


class TestUsageErrors:
    def setup_method(self):
        update_config(log_level="silent")

    def teardown_method(self):
        update_config(log_level="info")

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["matrix"],
            ["matrix", "--k", "0"],
            ["matrix", "--k", "2", "--format", "xml"],
            ["spectrum", "--k", "2", "--t", "half"],
            ["spectrum", "--k", "2", "--t", "1/0"],
            ["scan", "--k-max", "2", "--t-grid", "0:1:0"],
            ["scan", "--k-max", "2", "--t-grid", "0:1"],
            ["detshift", "--k", "2", "--shift", "cos(t)"],
            ["nonsense"],
        ],
    )
    def test_exit_code_two(self, capsys, argv):
        assert main(argv) == 2

    def test_unwritable_output(self, capsys, tmp_path):
        target = tmp_path / "missing" / "out.json"
        assert main(["matrix", "--k", "2", "--output", str(target)]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0


class TestBrokenCoefficient:
    """A sign flip in one band coefficient must surface as a failed ledger."""

    def setup_method(self):
        update_config(log_level="silent")

    def teardown_method(self):
        update_config(log_level="info")

    def test_verify_fails(self, capsys, mocker):
        original = rossi.band_coeff
        mocker.patch.object(
            rossi,
            "band_coeff",
            side_effect=lambda k, l: -original(k, l) if l == 3 else original(k, l),
        )
        code, out = run(capsys, "verify-paper", "--k-max", "2")
        assert code == 1
        data = json.loads(out)
        assert data["passed"] is False
        by_name = {c["name"]: c for c in data["checks"]}
        assert by_name["shifted determinants det(P_k + 3t²I)"]["status"] == "fail"
        assert by_name["shifted determinants det(P_k + 3t²I)"]["witness"]["k"] == 1

    def test_detshift_reports_mismatch(self, capsys, mocker):
        original = rossi.band_coeff
        mocker.patch.object(
            rossi,
            "band_coeff",
            side_effect=lambda k, l: -original(k, l) if l == 3 else original(k, l),
        )
        code, out = run(capsys, "detshift", "--k", "1")
        assert code == 1
        assert json.loads(out)["matches_published"] is False
