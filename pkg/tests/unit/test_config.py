"""Tests for solver and run configuration."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from paneitz_rossi.core import DEFAULT_CONFIG, get_config, update_config
from paneitz_rossi.types import RunConfig, SolverConfig, parse_t
from paneitz_rossi.utils.format import get_log_level


class TestDefaultConfig:
    def test_default_jacobi_tol(self):
        assert DEFAULT_CONFIG.jacobi_tol == 1e-12

    def test_default_sweep_cap(self):
        assert DEFAULT_CONFIG.jacobi_max_sweeps == 100

    def test_default_eig_rel_tol(self):
        assert DEFAULT_CONFIG.eig_rel_tol == 1e-8

    def test_default_log_level(self):
        assert DEFAULT_CONFIG.log_level == "info"

    def test_default_verbose(self):
        assert DEFAULT_CONFIG.verbose is False

    def test_default_jobs(self):
        assert DEFAULT_CONFIG.jobs == 1


class TestUpdateConfig:
    def setup_method(self):
        """Reset config to defaults before each test."""
        update_config(DEFAULT_CONFIG.model_dump())

    def teardown_method(self):
        update_config(DEFAULT_CONFIG.model_dump())

    def test_update_tolerance(self):
        update_config(jacobi_tol=1e-10)
        assert get_config().jacobi_tol == 1e-10

    def test_update_from_dict(self):
        update_config({"jacobi_max_sweeps": 7, "verbose": True})
        config = get_config()
        assert config.jacobi_max_sweeps == 7
        assert config.verbose is True

    def test_other_fields_retained(self):
        update_config(eig_rel_tol=1e-6)
        assert get_config().jacobi_tol == 1e-12

    def test_log_level_propagates(self):
        update_config(log_level="debug")
        assert get_log_level() == "debug"

    def test_invalid_value_rejected(self):
        with pytest.raises(ValidationError):
            update_config(jacobi_tol=-1.0)
        assert get_config().jacobi_tol == 1e-12

    def test_get_config_is_a_copy(self):
        config = get_config()
        config.jacobi_max_sweeps = 3
        assert get_config().jacobi_max_sweeps == 100


class TestParseT:
    def test_fraction(self):
        assert parse_t("1/3") == Fraction(1, 3)

    def test_integer_is_exact(self):
        assert parse_t("0") == Fraction(0)

    def test_decimal_is_float(self):
        assert parse_t("0.5") == 0.5
        assert isinstance(parse_t("0.5"), float)

    def test_decimal_exact(self):
        assert parse_t("0.1", exact=True) == Fraction(1, 10)

    def test_garbage(self):
        with pytest.raises(ValueError):
            parse_t("half")


class TestRunConfig:
    def test_spectrum_requires_t(self):
        with pytest.raises(ValidationError):
            RunConfig(command="spectrum", k=2)

    def test_matrix_requires_k(self):
        with pytest.raises(ValidationError):
            RunConfig(command="matrix")

    def test_scan_requires_grid(self):
        with pytest.raises(ValidationError):
            RunConfig(command="scan", k_max=3)

    def test_k_must_be_positive(self):
        with pytest.raises(ValidationError):
            RunConfig(command="matrix", k=0)

    def test_bad_t_rejected(self):
        with pytest.raises(ValidationError):
            RunConfig(command="spectrum", k=2, t="1/0")

    def test_unknown_format(self):
        with pytest.raises(ValidationError):
            RunConfig(command="matrix", k=2, output_format="xml")

    def test_verify_needs_nothing(self):
        run = RunConfig(command="verify-paper")
        assert run.k_max is None
        assert run.shift == "3t2"

    def test_t_value(self):
        run = RunConfig(command="spectrum", k=2, t="0.25", exact=True)
        assert run.t_value() == Fraction(1, 4)

    def test_solver_config_bounds(self):
        with pytest.raises(ValidationError):
            SolverConfig(jobs=0)
