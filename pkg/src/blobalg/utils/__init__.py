"""
Utility helpers for blobalg.
"""

from blobalg.utils.logging import get_logger, logger, setup_logging

__all__ = [
    "setup_logging",
    "get_logger",
    "logger",
]
