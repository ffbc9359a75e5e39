"""
CLI interface for blobalg.
"""

from blobalg.interface.cli.main import cli, main

__all__ = ["cli", "main"]
