"""
Logging configuration for blobalg.

Uses loguru. Everything goes to stderr so that stdout only ever carries
command output.
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[Path] = None,
    rotation: str = "10 MB",
    retention: str = "1 week",
    json_format: bool = False,
) -> None:
    """
    Configure logging for the toolkit.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional file path for log output
        rotation: Log rotation size/time
        retention: How long to keep old logs
        json_format: Whether to serialise file records as JSON
    """
    logger.remove()

    console_format = (
        "<green>{time:HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{extra[name]}</cyan> | "
        "<level>{message}</level>"
    )

    logger.configure(extra={"name": "blobalg"})
    logger.add(
        sys.stderr,
        format=console_format,
        level=level,
        colorize=True,
        backtrace=False,
        diagnose=False,
    )

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(log_file),
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} | {message}",
            level=level,
            rotation=rotation,
            retention=retention,
            serialize=json_format,
            backtrace=True,
        )


def get_logger(name: str) -> "logger":
    """
    Get a logger bound to a module name.

    Args:
        name: Name for the logger (usually __name__)

    Returns:
        Logger instance bound to the given name
    """
    return logger.bind(name=name)


__all__ = [
    "setup_logging",
    "get_logger",
    "logger",
]
