#!/usr/bin/env python3
"""
blobalg - Entry Point

Run the toolkit directly with `python main.py` without installing it.
"""

from blobalg.interface.cli.main import main

if __name__ == "__main__":
    main()
