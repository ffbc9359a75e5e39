"""
Core infrastructure for blobalg.

Provides configuration management, exceptions, wire models and the
verification suite profile loader.
"""

from blobalg.core.config import Config, get_config, set_config
from blobalg.core.exceptions import (
    BlobAlgError,
    ConfigError,
    DiagramError,
    InvalidDiagramError,
    NotCCError,
    NotInIdempotentSubalgebraError,
    NotPlanarError,
    ParamRingError,
    PolynomialParseError,
    RankLimitError,
    RankMismatchError,
    RepTheoryError,
    SuiteProfileError,
    SymplecticError,
    UnboundParameterError,
    UnknownLoopClassError,
    UnknownParameterError,
    UnknownSuiteError,
    UnsupportedFamilyError,
    WeightOutOfRangeError,
    ZeroDenominatorError,
    ZeroParameterError,
)
from blobalg.core.models import (
    DiagramModel,
    DimensionRowModel,
    ElementModel,
    FamilyName,
    GramReportModel,
    OutputFormat,
    PeriodicDiagramModel,
    SuiteName,
    SuiteResultModel,
)
from blobalg.core.suites import SuiteProfile, get_suite_profile

__all__ = [
    # Config
    "Config",
    "get_config",
    "set_config",
    # Exceptions
    "BlobAlgError",
    "ParamRingError",
    "ZeroDenominatorError",
    "UnboundParameterError",
    "UnknownParameterError",
    "PolynomialParseError",
    "DiagramError",
    "RankMismatchError",
    "InvalidDiagramError",
    "UnknownLoopClassError",
    "NotPlanarError",
    "UnsupportedFamilyError",
    "SymplecticError",
    "NotCCError",
    "NotInIdempotentSubalgebraError",
    "RepTheoryError",
    "WeightOutOfRangeError",
    "ZeroParameterError",
    "ConfigError",
    "RankLimitError",
    "SuiteProfileError",
    "UnknownSuiteError",
    # Models
    "DiagramModel",
    "DimensionRowModel",
    "ElementModel",
    "FamilyName",
    "GramReportModel",
    "OutputFormat",
    "PeriodicDiagramModel",
    "SuiteName",
    "SuiteResultModel",
    # Suites
    "SuiteProfile",
    "get_suite_profile",
]
