"""
Pytest configuration and fixtures for blobalg tests.
"""

from fractions import Fraction

import pytest

from blobalg.core.config import Config, LoggingConfig, VerifyConfig, set_config
from blobalg.diagrams import Diagram


@pytest.fixture
def temp_config(tmp_path):
    """Create a temporary configuration for testing."""
    return Config(
        max_rank=4,
        results_dir=tmp_path / "results",
        logging=LoggingConfig(level="DEBUG"),
        verify=VerifyConfig(seed=7, random_trials=20),
    )


@pytest.fixture
def worked_triple():
    """Three beaded diagrams on V^3_3 whose product collects one loop."""
    d1 = Diagram.build(3, 3, [(1, "3p", "ab"), (2, 3, "c"), ("1p", "2p")])
    d2 = Diagram.build(3, 3, [(1, "2p", "ef"), (3, "3p", "g"), (2, "1p", "d")])
    d3 = Diagram.build(3, 3, [(1, 2, "hi"), (3, "3p"), ("1p", "2p")])
    return d1, d2, d3


@pytest.fixture
def generic_point():
    """A rational point off every K-polynomial zero set used in the tests."""
    return {
        "d": Fraction(7, 2),
        "dL": Fraction(5, 3),
        "dR": Fraction(11, 4),
        "kL": Fraction(2, 7),
        "kR": Fraction(13, 5),
        "kLR": Fraction(3, 11),
    }


@pytest.fixture
def sample_suites_file(tmp_path):
    """Write a small suite profile."""
    path = tmp_path / "suites.yaml"
    path.write_text(
        """
suites:
  dims:
    max_rank: 3
  presentation:
    max_rank: 2
  confluence:
    max_rank: 1
    trials: 5
"""
    )
    return path


@pytest.fixture
def active_config(temp_config):
    """Install temp_config as the global configuration for one test."""
    set_config(temp_config)
    yield temp_config
    set_config(None)
