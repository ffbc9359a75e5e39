"""
Tests for the blobalg command line.
"""

import csv
import json

import pytest
from click.testing import CliRunner

from blobalg import __version__
from blobalg.diagrams import u_generator
from blobalg.interface.cli.main import cli, parse_point
from blobalg.params.laurent import D, ParamName


@pytest.fixture
def runner(active_config):
    """CLI runner against the temporary configuration (max_rank=4)."""
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ["-q", *args])


class TestParsePoint:
    """Test --set parsing."""

    def test_rationals_and_aliases(self):
        """Values are exact rationals, names may be aliases."""
        point = parse_point(("d=7/2", "kappa_LR=3", "dL = -1"))
        assert point[ParamName.DELTA] * 2 == 7
        assert point[ParamName.KAPPA_LR] == 3
        assert point[ParamName.DELTA_L] == -1


class TestCommands:
    """Test the CLI verbs."""

    def test_version(self, runner):
        """--version prints the package version."""
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_enumerate_json(self, runner):
        """TL_3 has five diagrams."""
        result = invoke(runner, "enumerate", "--family", "tl", "--n", "3", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data) == 5
        assert all(d["n"] == 3 and d["m"] == 3 for d in data)

    def test_enumerate_periodic(self, runner):
        """The periodic family at m=1 has five diagrams."""
        result = invoke(runner, "enumerate", "--family", "periodic", "--n", "1", "--format", "json")
        assert result.exit_code == 0
        assert len(json.loads(result.output)) == 5

    def test_multiply(self, runner):
        """U1 * U1 = delta U1."""
        u = u_generator(2, 1).to_json()
        result = invoke(runner, "multiply", u, u, "--family", "tl", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["coefficient"] == str(D)
        assert data["diagram"] == u_generator(2, 1).to_model().model_dump()

    def test_multiply_evaluates(self, runner):
        """--set evaluates the coefficient."""
        u = u_generator(2, 1).to_json()
        result = invoke(runner, "multiply", u, u, "--family", "tl", "--set", "d=5", "--format", "json")
        assert result.exit_code == 0
        assert json.loads(result.output)["value"] == "5"

    def test_multiply_rejects_garbage(self, runner):
        """Unparseable diagrams are usage errors."""
        result = invoke(runner, "multiply", '{"n": -1}', "{}", "--family", "tl")
        assert result.exit_code == 2

    def test_dims(self, runner):
        """Dimension table up to m=4."""
        result = invoke(runner, "dims", "--m", "2", "--format", "json")
        assert result.exit_code == 0
        rows = json.loads(result.output)
        assert [row["total"] for row in rows] == [1, 5, 19]
        assert rows[2]["dims"]["0"] == 4

    def test_dims_text(self, runner):
        """Text output renders a table."""
        result = invoke(runner, "dims", "--m", "4")
        assert result.exit_code == 0
        assert "sum of squares" in result.output

    def test_gram(self, runner):
        """Gamma_6(-1) factors as kL kR K3."""
        result = invoke(runner, "gram", "--m", "3", "--weight", "-1", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["dimension"] == 4
        assert {f["factor"] for f in data["factors"]} == {"kL", "kR", "K3"}

    def test_gram_text(self, runner):
        """Text output ends with the factorisation."""
        result = invoke(runner, "gram", "--m", "3", "--weight", "-1")
        assert result.exit_code == 0
        assert "K3" in result.output

    def test_gram_bad_weight(self, runner):
        """Weights outside the index set exit with status 1."""
        result = invoke(runner, "gram", "--m", "2", "--weight", "5")
        assert result.exit_code == 1

    def test_unknown_parameter(self, runner):
        """Unknown --set names are usage errors."""
        result = invoke(runner, "gram", "--m", "1", "--weight", "0", "--set", "q=2")
        assert result.exit_code == 2

    def test_rank_guard(self, runner):
        """Ranks above BLOBALG_MAX_RANK are refused."""
        result = invoke(runner, "dims", "--m", "5")
        assert result.exit_code == 2

    def test_scan_requires_all_parameters(self, runner):
        """scan refuses a partial point."""
        result = invoke(runner, "scan", "--m", "1", "--set", "d=2")
        assert result.exit_code == 2

    def test_scan(self, runner, generic_point):
        """scan reports one determinant per weight."""
        sets = [arg for k, v in generic_point.items() for arg in ("--set", f"{k}={v}")]
        result = invoke(runner, "scan", "--m", "1", *sets, "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert set(data["determinants"]) == {"-1", "0"}
        assert "semisimple" in data

    def test_verify(self, runner):
        """A passing suite exits 0."""
        result = invoke(runner, "verify", "dims", "--max-rank", "2", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data[0]["name"] == "dims"
        assert data[0]["passed"] is True

    def test_verify_unknown_suite(self, runner):
        """Unknown suite names are usage errors."""
        result = invoke(runner, "verify", "everything")
        assert result.exit_code == 2

    def test_export_dims(self, runner, tmp_path):
        """export writes a CSV dimension table."""
        out = tmp_path / "dims.csv"
        result = invoke(runner, "export", "dims", "--m", "2", "--output", str(out))
        assert result.exit_code == 0
        with open(out, newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["m", "l=-2", "l=-1", "l=0", "l=1", "total"]
        assert rows[-1] == ["2", "1", "1", "4", "1", "19"]

    def test_export_default_location(self, runner, active_config):
        """Without --output the file lands in the results directory."""
        result = invoke(runner, "export", "gram", "--m", "1", "--format", "json")
        assert result.exit_code == 0
        assert (active_config.results_dir / "gram_m1.json").exists()
