"""Verification suites and table export."""
from blobalg.analysis.export import dimension_table, export_dimensions, export_gram
from blobalg.analysis.verify import SUITES, SuiteResult, SuiteRunner

__all__ = [
    "dimension_table",
    "export_dimensions",
    "export_gram",
    "SUITES",
    "SuiteResult",
    "SuiteRunner",
]
