"""
User-facing interfaces for blobalg.
"""
