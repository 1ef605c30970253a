"""Exact decision engine for tight and solid closure of homogeneous primary ideals
in the coordinate ring of a smooth plane curve."""

__version__ = "0.1.0"
