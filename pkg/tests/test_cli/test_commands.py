"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from fock_ida.analyzer.acceptance import EXIT_OK, EXIT_USAGE
from fock_ida.cli.main import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def write_config(path, **fields):
    path.write_text(json.dumps(fields), encoding="utf-8")
    return str(path)


class TestListing:
    def test_catalog_json(self, runner):
        result = runner.invoke(cli, ["catalog", "--format", "json"])
        assert result.exit_code == 0
        names = [entry["name"] for entry in json.loads(result.output)]
        assert "zbar" in names
        assert "bump(0,1)" in names

    def test_catalog_table(self, runner):
        result = runner.invoke(cli, ["catalog"])
        assert result.exit_code == 0
        assert "Symbol Catalog" in result.output

    def test_list_experiments(self, runner):
        result = runner.invoke(cli, ["list", "experiments", "--format", "json"])
        assert result.exit_code == 0
        ids = [entry["experiment_id"] for entry in json.loads(result.output)]
        assert ids == [
            "E1-equivalence",
            "E2-berger-coburn",
            "E3-hs-identity",
            "E4-compactness",
            "E5-beurling",
            "E6-toeplitz",
        ]


class TestUsageErrors:
    def test_missing_config(self, runner, tmp_path):
        result = runner.invoke(cli, ["run", str(tmp_path / "missing.json")])
        assert result.exit_code == EXIT_USAGE

    def test_empty_symbol_list(self, runner, tmp_path):
        path = write_config(tmp_path / "c.json", experiment="E2-berger-coburn", symbols=[])
        result = runner.invoke(cli, ["run", path])
        assert result.exit_code == EXIT_USAGE

    def test_unknown_symbol(self, runner, tmp_path):
        path = write_config(tmp_path / "c.json", experiment="E2-berger-coburn", output=str(tmp_path / "out"))
        result = runner.invoke(cli, ["run", path, "--symbol", "foo"])
        assert result.exit_code == EXIT_USAGE
        assert not (tmp_path / "out").exists()

    def test_invalid_exponent(self, runner, tmp_path):
        path = write_config(tmp_path / "c.json", experiment="E2-berger-coburn")
        result = runner.invoke(cli, ["run", path, "--p", "-1"])
        assert result.exit_code == EXIT_USAGE

    def test_unknown_experiment(self, runner, tmp_path):
        path = write_config(tmp_path / "c.json", experiment="E7-missing")
        result = runner.invoke(cli, ["run", path])
        assert result.exit_code == EXIT_USAGE


@pytest.mark.slow
class TestRun:
    def test_unbounded_failure_mode_passes(self, runner, tmp_path):
        out = tmp_path / "out"
        path = write_config(tmp_path / "c.json", experiment="E2-berger-coburn", p_values=[2], output=str(out))
        result = runner.invoke(cli, ["run", path, "--symbol", "z", "--quiet"])
        assert result.exit_code == EXIT_OK, result.output
        summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
        assert summary["passed"] is True
        assert "unbounded-failure-mode" in [c["name"] for c in summary["checks"]]

    def test_rows_are_reproducible(self, runner, tmp_path):
        path = write_config(
            tmp_path / "c.json",
            experiment="E3-hs-identity",
            symbols=["bump(0,1)"],
            p_values=[2],
            grid_radius=5.0,
            center_spacing=0.5,
        )
        tables = []
        for name in ("a", "b"):
            out = tmp_path / name
            result = runner.invoke(cli, ["run", path, "--output", str(out), "--quiet"])
            assert result.exit_code == EXIT_OK, result.output
            tables.append((out / "rows.csv").read_bytes())
        assert tables[0] == tables[1]
