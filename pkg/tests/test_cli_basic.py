"""Tests for CLI interface."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from braidmono import cli as cli_module
from braidmono.cli import cli


def test_cli_help() -> None:
    """Test CLI --help output."""
    runner = CliRunner()
    result = runner.invoke(cli, ["--help"])

    assert result.exit_code == 0
    assert "braid monodromy" in result.output
    assert "Options:" in result.output


def test_cli_version() -> None:
    """Test CLI --version output."""
    runner = CliRunner()
    result = runner.invoke(cli, ["--version"])

    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_run_command_help() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["run", "--help"])

    assert result.exit_code == 0
    assert "--dump-trajectories" in result.output
    assert "--quotients" in result.output


def test_fixtures_command_lists_curves() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["fixtures"])

    assert result.exit_code == 0
    for name in ("C", "Cprime", "conic", "cubic", "quartic"):
        assert f"{name}: " in result.output


class TestRunCommand:
    """The run command."""

    def test_conic_structured(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["run", "--expr", "x^2 + y^2 - 1", "--no-cache", "--format", "structured"]
        )

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["status"] == "complete"
        assert report["abelianization"] == [2]
        assert report["order"]["order"] == 2
        assert "timing" not in report

    def test_conic_text_with_timing(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["run", "--expr", "x^2 + y^2 - 1", "--no-cache", "--timing"])

        assert result.exit_code == 0
        assert "Braid monodromy" in result.stdout
        assert "order: 2" in result.stdout
        assert "Timing" in result.stdout

    def test_output_file(self, tmp_path: Path) -> None:
        target = tmp_path / "report.json"
        runner = CliRunner()
        result = runner.invoke(
            cli,
            ["run", "--fixture", "conic", "--no-cache", "--format", "structured"]
            + ["-o", str(target)],
        )

        assert result.exit_code == 0
        assert json.loads(target.read_text(encoding="utf-8"))["curve"]["name"] == "conic"

    def test_curve_file(self, tmp_path: Path) -> None:
        curve = tmp_path / "fermat.poly"
        curve.write_text("# Fermat cubic\ny^3 + x^3 - 1\n", encoding="utf-8")
        runner = CliRunner()
        result = runner.invoke(
            cli, ["run", "--curve", str(curve), "--no-cache", "--format", "structured"]
        )

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["curve"]["name"] == "fermat"
        assert report["abelianization"] == [3]

    def test_non_generic_curve_fails(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["run", "--expr", "x*y - 1", "--no-cache"])

        assert result.exit_code == 1
        assert "--shear" in result.output

    def test_missing_curve_source_fails(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["run", "--no-cache"])

        assert result.exit_code == 1
        assert "exactly one" in result.output

    def test_bad_epsilon_fails(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["run", "--expr", "x^2 + y^2 - 1", "--no-cache", "--epsilon", "-1/4"]
        )

        assert result.exit_code == 1
        assert "epsilon must be positive" in result.output

    def test_unknown_quotient_fails(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["run", "--expr", "x^2 + y^2 - 1", "--no-cache", "--quotients", "m11"]
        )

        assert result.exit_code == 1
        assert "unknown quotient target" in result.output

    def test_exceeded_coset_bound_exits_inconclusive(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["run", "--expr", "x^2 + y^2 - 1", "--no-cache", "--coset-bound", "1"]
        )

        assert result.exit_code == cli_module.EXIT_INCONCLUSIVE
        assert "order: unknown" in result.stdout


class TestInspectionCommands:
    """discriminant, classify and certify-segment."""

    def test_discriminant(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["discriminant", "--expr", "x^2 + y^2 - 1"])

        assert result.exit_code == 0
        assert "degree 2" in result.output
        assert "eta1 = " in result.output
        assert "eta2 = " in result.output

    def test_classify_line(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["classify", "--fixture", "C", "--x", "0"])

        assert result.exit_code == 0
        assert "A9" in result.output
        assert "A4" in result.output
        assert "total contribution over x = 0: 15" in result.output

    def test_classify_point_prints_branches(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["classify", "--expr", "y^2 - x^3", "--x", "0", "--y", "0"])

        assert result.exit_code == 0
        assert "type: A2" in result.output

    @pytest.mark.slow
    def test_certify_segment(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["certify-segment", "--fixture", "C", "--lower", "1/10", "--upper", "3/5"]
        )

        assert result.exit_code == 0
        assert "resultant roots on [1/10, 3/5]" in result.output
        assert "x0 = 0.120" in result.output

    def test_certify_segment_quartic(self) -> None:
        runner = CliRunner()
        result = runner.invoke(
            cli, ["certify-segment", "--fixture", "quartic", "--lower=-1", "--upper", "1"]
        )

        assert result.exit_code == 0
        assert "resultant roots on [-1, 1]: 2" in result.output
        assert "x0 = 0.000000" in result.output
        assert "x0 = 0.343146" in result.output
        assert result.output.count("4 aligned (alignment)") == 2


def test_clear_cache(monkeypatch, tmp_path: Path) -> None:
    """clear-cache works on the configured database path."""
    monkeypatch.setattr(cli_module.settings, "cache_db_path", tmp_path / "braids.db")
    runner = CliRunner()
    result = runner.invoke(cli, ["clear-cache"])

    assert result.exit_code == 0
    assert "removed 0 cached braids" in result.output
