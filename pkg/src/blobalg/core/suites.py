"""
Suite profile loader for blobalg.

A suite profile is a YAML file naming verification suites and the ranks
(and random sample counts) they run at. Suites absent from a profile keep
the built-in defaults.
"""

from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError

from blobalg.core.config import get_config
from blobalg.core.exceptions import SuiteProfileError, UnknownSuiteError
from blobalg.core.models import SuiteName, SuiteProfileModel, SuiteSettingsModel
from blobalg.utils.logging import get_logger

logger = get_logger(__name__)


DEFAULT_SETTINGS: dict[SuiteName, SuiteSettingsModel] = {
    SuiteName.PRESENTATION: SuiteSettingsModel(max_rank=4),
    SuiteName.CONFLUENCE: SuiteSettingsModel(max_rank=3, trials=10000),
    SuiteName.FOLD_ROUNDTRIP: SuiteSettingsModel(max_rank=3),
    SuiteName.CELLULARITY: SuiteSettingsModel(max_rank=2),
    SuiteName.DIMS: SuiteSettingsModel(max_rank=6),
    SuiteName.GRAM_IDENTITIES: SuiteSettingsModel(max_rank=3),
    SuiteName.LOCALISATION: SuiteSettingsModel(max_rank=3),
    SuiteName.RESTRICTION: SuiteSettingsModel(max_rank=5),
    SuiteName.GENERATION: SuiteSettingsModel(max_rank=4),
}


def resolve_suite(name: str) -> SuiteName:
    """Map a suite name onto SuiteName, raising UnknownSuiteError otherwise."""
    try:
        return SuiteName(name)
    except ValueError:
        raise UnknownSuiteError(name, [s.value for s in SuiteName])


class SuiteProfile:
    """
    Settings for every verification suite.

    Built from the defaults, optionally overlaid with a YAML profile.
    """

    def __init__(self, overrides: Optional[dict[SuiteName, SuiteSettingsModel]] = None):
        self._settings = dict(DEFAULT_SETTINGS)
        self._settings.update(overrides or {})

    def settings(self, name: SuiteName | str) -> SuiteSettingsModel:
        return self._settings[resolve_suite(name) if isinstance(name, str) else name]

    def max_rank(self, name: SuiteName | str) -> int:
        return self.settings(name).max_rank

    def trials(self, name: SuiteName | str, default: int) -> int:
        return self.settings(name).trials or default

    @staticmethod
    def _parse_yaml(path: Path) -> dict:
        """Parse a YAML file and return the data."""
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SuiteProfileError(str(path), [str(e)])
        except OSError as e:
            raise SuiteProfileError(str(path), [f"IO error: {e}"])
        if data is None:
            raise SuiteProfileError(str(path), ["Empty YAML file"])
        if not isinstance(data, dict):
            raise SuiteProfileError(str(path), ["top level must be a mapping"])
        return data

    @classmethod
    def load(cls, path: Path) -> "SuiteProfile":
        """
        Load and validate a suite profile.

        Args:
            path: YAML file with a top-level ``suites`` mapping

        Returns:
            SuiteProfile with the file's settings over the defaults

        Raises:
            SuiteProfileError: If the file cannot be read or fails validation
            UnknownSuiteError: If the file names a suite that does not exist
        """
        data = cls._parse_yaml(path)
        try:
            model = SuiteProfileModel(**data)
        except ValidationError as e:
            errors = [f"{err['loc']}: {err['msg']}" for err in e.errors()]
            raise SuiteProfileError(str(path), errors)

        overrides = {resolve_suite(name): settings for name, settings in model.suites.items()}
        logger.info(f"Loaded suite profile {path}: {sorted(s.value for s in overrides)}")
        return cls(overrides)


def get_suite_profile() -> SuiteProfile:
    """The profile named by the configuration, or the defaults."""
    path = get_config().verify.suites_file
    if path is None:
        return SuiteProfile()
    return SuiteProfile.load(path)
