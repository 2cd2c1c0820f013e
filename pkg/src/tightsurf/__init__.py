"""Exact certification and construction of tight polyhedral surfaces with boundary."""

__version__ = "0.1.0"
