"""
Tests for the core module of blobalg.
"""

import pytest
from pydantic import ValidationError

from blobalg import __version__
from blobalg.core.config import Config, get_config
from blobalg.core.exceptions import (
    BlobAlgError,
    ConfigError,
    RankLimitError,
    SuiteProfileError,
    UnknownSuiteError,
    WeightOutOfRangeError,
    ZeroParameterError,
)
from blobalg.core.models import SuiteName, SuiteSettingsModel
from blobalg.core.suites import DEFAULT_SETTINGS, SuiteProfile, get_suite_profile, resolve_suite


class TestVersion:
    """Test version information."""

    def test_version_exists(self):
        """Version should be defined."""
        assert __version__ is not None
        assert isinstance(__version__, str)

    def test_version_format(self):
        """Version should follow semver format."""
        parts = __version__.split(".")
        assert len(parts) >= 2
        assert all(p.isdigit() for p in parts[:2])


class TestConfig:
    """Test configuration management."""

    def test_default_config(self):
        """Default config should have sensible defaults."""
        config = Config()
        assert config.max_rank == 6
        assert config.logging.level == "WARNING"
        assert config.logging.log_file is None
        assert config.verify.random_trials == 200
        assert config.verify.suites_file is None

    def test_config_from_env(self, monkeypatch, tmp_path):
        """Config should load from environment variables."""
        monkeypatch.setenv("BLOBALG_MAX_RANK", "3")
        monkeypatch.setenv("BLOBALG_RESULTS_DIR", str(tmp_path / "out"))
        monkeypatch.setenv("BLOBALG_LOG_LEVEL", "debug")
        monkeypatch.setenv("BLOBALG_SEED", "11")
        monkeypatch.setenv("BLOBALG_RANDOM_TRIALS", "9")
        monkeypatch.setenv("BLOBALG_SUITES_FILE", str(tmp_path / "suites.yaml"))

        config = Config.from_env()
        assert config.max_rank == 3
        assert config.results_dir == tmp_path / "out"
        assert config.logging.level == "DEBUG"
        assert config.verify.seed == 11
        assert config.verify.random_trials == 9
        assert config.verify.suites_file == tmp_path / "suites.yaml"

    def test_check_rank(self, temp_config):
        """Ranks above the guard should be refused."""
        assert temp_config.check_rank(4) == 4
        with pytest.raises(RankLimitError) as exc:
            temp_config.check_rank(5)
        assert exc.value.details == {"rank": 5, "limit": 4}

    def test_ensure_directories(self, temp_config):
        """Results directory should be created on demand."""
        assert not temp_config.results_dir.exists()
        temp_config.ensure_directories()
        assert temp_config.results_dir.is_dir()

    def test_set_config(self, active_config):
        """The global instance should be replaceable."""
        assert get_config() is active_config


class TestExceptions:
    """Test custom exceptions."""

    def test_base_exception(self):
        """Base exception should work correctly."""
        err = BlobAlgError("Test error", {"key": "value"})
        assert "Test error" in str(err)
        assert err.message == "Test error"
        assert err.details == {"key": "value"}

    def test_details_default_to_empty(self):
        """Missing details should become an empty dict."""
        assert BlobAlgError("x").details == {}

    def test_hierarchy(self):
        """Config errors should be catchable as BlobAlgError."""
        assert issubclass(RankLimitError, ConfigError)
        assert issubclass(SuiteProfileError, BlobAlgError)

    def test_weight_out_of_range(self):
        """Weight errors should carry m and the weight."""
        err = WeightOutOfRangeError(2, 5)
        assert err.details == {"m": 2, "weight": 5}
        assert "5" in err.message

    def test_zero_parameter(self):
        """Zero-parameter errors should list the offending names."""
        err = ZeroParameterError(["d", "kLR"])
        assert err.details["params"] == ["d", "kLR"]
        assert "kLR" in err.message


class TestSuiteProfile:
    """Test suite profile loading."""

    def test_defaults_cover_every_suite(self):
        """Every registered suite should have a default."""
        assert set(DEFAULT_SETTINGS) == set(SuiteName)
        profile = SuiteProfile()
        assert profile.max_rank("dims") == 6
        assert profile.max_rank(SuiteName.CONFLUENCE) == 3
        assert profile.trials(SuiteName.CONFLUENCE, 10) == 10000
        assert profile.trials(SuiteName.DIMS, 10) == 10

    def test_resolve_suite(self):
        """Suite names should resolve by value."""
        assert resolve_suite("gram-paper-identities") is SuiteName.GRAM_IDENTITIES
        with pytest.raises(UnknownSuiteError) as exc:
            resolve_suite("nope")
        assert "dims" in exc.value.details["available"]

    def test_load_profile(self, sample_suites_file):
        """A profile file should override only the suites it names."""
        profile = SuiteProfile.load(sample_suites_file)
        assert profile.max_rank("dims") == 3
        assert profile.max_rank("presentation") == 2
        assert profile.max_rank("confluence") == 1
        assert profile.trials("confluence", 200) == 5
        assert profile.max_rank("restriction") == 5

    def test_invalid_yaml(self, tmp_path):
        """Malformed YAML should raise SuiteProfileError."""
        path = tmp_path / "bad.yaml"
        path.write_text("suites: [unclosed")
        with pytest.raises(SuiteProfileError):
            SuiteProfile.load(path)

    def test_empty_file(self, tmp_path):
        """An empty file should be rejected."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        with pytest.raises(SuiteProfileError) as exc:
            SuiteProfile.load(path)
        assert "Empty YAML file" in exc.value.details["errors"]

    def test_missing_file(self, tmp_path):
        """A missing file should be reported as an IO error."""
        with pytest.raises(SuiteProfileError):
            SuiteProfile.load(tmp_path / "absent.yaml")

    def test_validation_error(self, tmp_path):
        """Out-of-range settings should list the failing field."""
        path = tmp_path / "rank.yaml"
        path.write_text("suites:\n  dims:\n    max_rank: 99\n")
        with pytest.raises(SuiteProfileError) as exc:
            SuiteProfile.load(path)
        assert any("max_rank" in e for e in exc.value.details["errors"])

    def test_unknown_suite_in_file(self, tmp_path):
        """Unknown suite names should not be silently ignored."""
        path = tmp_path / "unknown.yaml"
        path.write_text("suites:\n  everything:\n    max_rank: 1\n")
        with pytest.raises(UnknownSuiteError):
            SuiteProfile.load(path)

    def test_profile_from_config(self, active_config, sample_suites_file):
        """The configured suites file should be picked up."""
        active_config.verify.suites_file = sample_suites_file
        assert get_suite_profile().max_rank("dims") == 3

    def test_settings_model_bounds(self):
        """Trials must be positive."""
        with pytest.raises(ValidationError):
            SuiteSettingsModel(max_rank=1, trials=0)
