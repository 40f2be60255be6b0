"""Exact analysis of polynomial maps of the affine plane."""

__version__ = "0.1.0"
