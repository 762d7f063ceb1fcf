"""Exact domination, bondage and restricted-connectivity invariants with surface bounds."""

__version__ = "0.1.0"
