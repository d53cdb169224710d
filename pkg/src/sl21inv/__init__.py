"""Exact evaluation of the sl(2|1) link invariant M and its specializations."""

__version__ = "0.1.0"
