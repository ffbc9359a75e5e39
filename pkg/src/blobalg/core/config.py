"""
Configuration management for blobalg.

Settings come from environment variables (optionally a .env file) with
defaults suited to desk-scale computation.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from blobalg.core.exceptions import RankLimitError


@dataclass
class LoggingConfig:
    """Log sink configuration."""

    level: str = "WARNING"
    log_file: Optional[Path] = None
    json_format: bool = False


@dataclass
class VerifyConfig:
    """Settings for the randomised verification suites."""

    seed: int = 20240601
    random_trials: int = 200
    suites_file: Optional[Path] = None


@dataclass
class Config:
    """
    Main configuration class for blobalg.

    Loads configuration from environment variables and provides
    defaults for all settings.
    """

    max_rank: int = 6
    results_dir: Path = field(default_factory=lambda: Path.cwd() / "results")

    logging: LoggingConfig = field(default_factory=LoggingConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    @classmethod
    def from_env(cls, env_file: Optional[Path] = None) -> "Config":
        """
        Load configuration from environment variables.

        Args:
            env_file: Optional path to .env file

        Returns:
            Config instance with values from environment
        """
        if env_file and env_file.exists():
            load_dotenv(env_file)
        else:
            load_dotenv()

        config = cls()

        if max_rank := os.getenv("BLOBALG_MAX_RANK"):
            config.max_rank = int(max_rank)
        if results_dir := os.getenv("BLOBALG_RESULTS_DIR"):
            config.results_dir = Path(results_dir)

        log_file = os.getenv("BLOBALG_LOG_FILE")
        config.logging = LoggingConfig(
            level=os.getenv("BLOBALG_LOG_LEVEL", "WARNING").upper(),
            log_file=Path(log_file) if log_file else None,
            json_format=os.getenv("BLOBALG_LOG_JSON", "false").lower() == "true",
        )

        suites_file = os.getenv("BLOBALG_SUITES_FILE")
        config.verify = VerifyConfig(
            seed=int(os.getenv("BLOBALG_SEED", "20240601")),
            random_trials=int(os.getenv("BLOBALG_RANDOM_TRIALS", "200")),
            suites_file=Path(suites_file) if suites_file else None,
        )

        return config

    def ensure_directories(self) -> None:
        """Create the results directory if it doesn't exist."""
        self.results_dir.mkdir(parents=True, exist_ok=True)

    def check_rank(self, rank: int) -> int:
        """Return rank unchanged, or raise RankLimitError above max_rank."""
        if rank > self.max_rank:
            raise RankLimitError(rank, self.max_rank)
        return rank


# Global configuration instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config.from_env()
    return _config


def set_config(config: Config) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config
