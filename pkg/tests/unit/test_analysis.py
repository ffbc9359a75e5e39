"""
Tests for the verification suites and table export.
"""

import csv
import json

import pytest

from blobalg.analysis import SUITES, SuiteRunner, dimension_table, export_dimensions, export_gram
from blobalg.core.exceptions import UnknownSuiteError
from blobalg.core.models import OutputFormat, SuiteName, SuiteSettingsModel
from blobalg.core.suites import SuiteProfile
from blobalg.reptheory import gram_matrix
from blobalg.symplectic import enumerate_Bx


@pytest.fixture
def small_profile():
    """Every suite at rank 1 or 2 with few random samples."""
    return SuiteProfile({
        SuiteName.PRESENTATION: SuiteSettingsModel(max_rank=2),
        SuiteName.CONFLUENCE: SuiteSettingsModel(max_rank=1, trials=5),
        SuiteName.FOLD_ROUNDTRIP: SuiteSettingsModel(max_rank=1),
        SuiteName.CELLULARITY: SuiteSettingsModel(max_rank=1),
        SuiteName.DIMS: SuiteSettingsModel(max_rank=3),
        SuiteName.GRAM_IDENTITIES: SuiteSettingsModel(max_rank=2),
        SuiteName.LOCALISATION: SuiteSettingsModel(max_rank=1),
        SuiteName.RESTRICTION: SuiteSettingsModel(max_rank=2),
        SuiteName.GENERATION: SuiteSettingsModel(max_rank=2),
    })


@pytest.fixture
def suite_runner(active_config, small_profile):
    return SuiteRunner(profile=small_profile, seed=3)


class TestSuiteRunner:
    """Test the named verification suites."""

    def test_every_suite_registered(self):
        """Each suite name has an implementation."""
        assert set(SUITES) == set(SuiteName)

    @pytest.mark.parametrize("name", [s.value for s in SuiteName])
    def test_suite_passes_at_small_rank(self, suite_runner, name):
        """Each suite passes at its small-rank setting."""
        result = suite_runner.run(name)
        assert result.passed, result.failures[:5]
        assert result.checks > 0

    def test_max_rank_override(self, suite_runner):
        """An explicit rank replaces the profile's."""
        result = suite_runner.run(SuiteName.DIMS, max_rank=1)
        assert "max_rank=1" in result.detail

    def test_confluence_notes_trials(self, suite_runner):
        """The random sample count is reported."""
        result = suite_runner.run("confluence")
        assert "5 random pseudodiagrams" in result.detail

    def test_confluence_compares_both_routes(self, suite_runner):
        """Each random sample is checked against rewrite order and the periodic route."""
        result = suite_runner.run("confluence")
        pairs = len(enumerate_Bx(1)) ** 2
        assert result.checks == pairs + 2 * 5

    def test_run_all_subset(self, suite_runner):
        """run_all keeps the requested order."""
        results = suite_runner.run_all(["restriction", "dims"])
        assert [r.name for r in results] == [SuiteName.RESTRICTION, SuiteName.DIMS]

    def test_unknown_suite(self, suite_runner):
        """Unknown names raise UnknownSuiteError."""
        with pytest.raises(UnknownSuiteError):
            suite_runner.run("everything")

    def test_result_model(self, suite_runner):
        """Results convert to their pydantic model."""
        model = suite_runner.run("dims").to_model()
        assert model.name is SuiteName.DIMS
        assert model.passed
        assert model.elapsed >= 0


class TestDimensionTable:
    """Test dimension tables."""

    def test_rows(self):
        """Sums of squares for m = 0, 1, 2."""
        rows = dimension_table(2)
        assert [row.total for row in rows] == [1, 5, 19]
        assert rows[1].dims == {-1: 1, 0: 2}

    def test_export_csv(self, tmp_path):
        """CSV has a blank cell where a weight does not occur."""
        path = export_dimensions(dimension_table(1), tmp_path / "out" / "dims.csv")
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
        assert rows == [["m", "l=-1", "l=0", "total"], ["0", "", "1", "1"], ["1", "1", "2", "5"]]

    def test_export_json(self, tmp_path):
        """JSON is the list of row models."""
        path = export_dimensions(dimension_table(1), tmp_path / "dims.json", OutputFormat.JSON)
        data = json.loads(path.read_text())
        assert data[1]["total"] == 5


class TestGramExport:
    """Test Gram report export."""

    def test_export_csv(self, tmp_path):
        """One CSV row per report with the factor list."""
        reports = [gram_matrix(3, -1).to_model()]
        path = export_gram(reports, tmp_path / "gram.csv", OutputFormat.CSV)
        with open(path, newline="") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 1
        assert rows[0]["dimension"] == "4"
        assert "K3^1" in rows[0]["factors"]
        assert rows[0]["matrix"].count(" | ") == 3

    def test_export_json(self, tmp_path):
        """JSON keeps the full matrix."""
        reports = [gram_matrix(2, l).to_model() for l in (-1, 0)]
        path = export_gram(reports, tmp_path / "gram.json")
        data = json.loads(path.read_text())
        assert [r["weight"] for r in data] == [-1, 0]
        assert len(data[1]["matrix"]) == 4
