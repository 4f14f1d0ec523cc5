"""Exact combinatorics of complexity one torus actions."""

__version__ = "0.1.0"
