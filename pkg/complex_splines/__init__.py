"""Exponential B-splines of complex order."""

__version__ = "1.0.0"
