"""
Tests for the command-line interface
"""

import json

import pytest
from typer.testing import CliRunner

from src import __version__
from src.cli import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def reset_settings():
    """Reset settings singleton before each test"""
    import src.config as config

    config._settings = None
    yield
    config._settings = None


def run(*args):
    return runner.invoke(app, list(args))


class TestLegendreCommand:
    """Test suite for the legendre command"""

    def test_csv(self):
        """Test p_2 as CSV"""
        result = run("legendre", "--n", "2", "--format", "csv")
        assert result.exit_code == 0
        assert result.stdout.strip() == "-1/2,0,3/2"

    def test_plain_default(self):
        """Test p_0 in the default format"""
        result = run("legendre", "--n", "0")
        assert result.exit_code == 0
        assert result.stdout.strip() == "1"

    def test_rodrigues_canonical_fractions(self):
        """Test p_4 from Rodrigues' formula with reduced fractions"""
        result = run("legendre", "--n", "4", "--method", "rodrigues", "--format", "csv")
        assert result.exit_code == 0
        assert result.stdout.strip() == "3/8,0,-15/4,0,35/8"

    def test_json(self):
        """Test the JSON payload"""
        result = run(
            "legendre", "--n", "3", "--method", "explicit2", "--format", "json"
        )
        payload = json.loads(result.stdout)
        assert payload == {
            "coefficients": ["0", "-3/2", "0", "5/2"],
            "method": "explicit2",
            "n": 3,
        }

    def test_latex(self):
        """Test the LaTeX rendering"""
        result = run("legendre", "--n", "2", "--format", "latex")
        expected = "\\[ p_{2}(x) = \\frac{3}{2} x^{2} - \\frac{1}{2} \\]"
        assert result.stdout.strip() == expected

    def test_usage_errors(self):
        """Test negative degrees and unknown methods"""
        assert run("legendre", "--n", "-1").exit_code == 2
        assert run("legendre", "--n", "2", "--method", "chebyshev").exit_code == 2


class TestCoeffsCommand:
    """Test suite for the coeffs command"""

    def test_csv(self):
        """Test rows 1 .. 4 as CSV"""
        result = run("coeffs", "--n-max", "4", "--format", "csv")
        assert result.exit_code == 0
        assert result.stdout.strip() == "1\n1,1\n3,3,1\n15,15,6,1"

    def test_single_row(self):
        """Test the base row"""
        result = run("coeffs", "--n-max", "1")
        assert result.stdout.strip() == "1"

    def test_closed_form_check(self):
        """Test that reconciliation follows the table"""
        result = run("coeffs", "--n-max", "10", "--check-closed-form")
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 11
        assert lines[3] == "15 15 6 1"
        assert lines[-1] == "reconciliation: consistent (55 entries, N <= 10)"

    def test_json_reconciliation(self):
        """Test the JSON reconciliation section"""
        result = run(
            "coeffs", "--n-max", "3", "--check-closed-form", "--format", "json"
        )
        payload = json.loads(result.stdout)
        assert payload["rows"] == [[1], [1, 1], [3, 3, 1]]
        assert payload["reconciliation"]["consistent"] is True
        assert payload["reconciliation"]["entries_checked"] == 6


class TestHigherCommand:
    """Test suite for the higher command"""

    def test_rows(self):
        """Test p_n^(2) for n = 0 .. 2"""
        result = run("higher", "--alpha", "2", "--order", "2", "--format", "csv")
        assert result.exit_code == 0
        assert result.stdout.strip() == "1\n0,2\n-1,0,4"

    def test_explicit_sum_route(self):
        """Test that the explicit sum gives the same rows as series powering"""
        series = run("higher", "--alpha", "5", "--order", "4", "--format", "csv")
        explicit = run(
            "higher", "--alpha", "5", "--order", "4", "--via-explicit-sum",
            "--format", "csv",
        )
        assert explicit.exit_code == 0
        assert explicit.stdout == series.stdout

    def test_explicit_sum_needs_odd_alpha(self):
        """Test that even alpha is a usage error"""
        result = run("higher", "--alpha", "4", "--order", "2", "--via-explicit-sum")
        assert result.exit_code == 2


class TestVerifyCommand:
    """Test suite for the verify command"""

    def test_json_all_passed(self):
        """Test JSON Lines output for a passing run"""
        result = run(
            "verify", "--n-max", "5", "--N-max", "2", "--order", "12",
            "--format", "json",
        )
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 26
        assert all(json.loads(line)["passed"] is True for line in lines)

    def test_minimal_run(self):
        """Test the smallest legal bounds"""
        result = run("verify", "--n-max", "0", "--N-max", "1", "--order", "1")
        assert result.exit_code == 0
        assert all(line.startswith("PASS") for line in result.stdout.splitlines())

    def test_order_below_family_index(self):
        """Test that M < N_max is a usage error"""
        result = run("verify", "--n-max", "5", "--N-max", "3", "--order", "2")
        assert result.exit_code == 2

    def test_supplementary_csv(self):
        """Test supplementary checks in CSV output"""
        result = run(
            "verify", "--n-max", "1", "--N-max", "1", "--order", "3",
            "--supplementary", "--format", "csv",
        )
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "identity_id,params,passed,t_power,x_power,lhs,rhs"
        assert lines[-1] == "CLOSED_FORM,N=15,true,,,,"

    def test_workers_option(self):
        """Test the global worker option"""
        result = run(
            "--workers", "3", "verify", "--n-max", "3", "--N-max", "2", "--order", "6"
        )
        assert result.exit_code == 0

    def test_invalid_log_level(self):
        """Test that an unknown log level is a usage error"""
        result = run("--log-level", "LOUD", "version")
        assert result.exit_code == 2


class TestVersionCommand:
    """Test suite for the version command"""

    def test_version(self):
        """Test the version string"""
        result = run("version")
        assert result.exit_code == 0
        assert result.stdout.strip() == __version__


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
