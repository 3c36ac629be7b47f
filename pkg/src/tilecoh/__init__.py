"""Cohomology and order invariants of substitution tiling spaces, computed exactly."""

__version__ = "0.1.0"
