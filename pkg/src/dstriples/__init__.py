"""Exact arithmetic for primitive integer curvature triples of touching circles."""

from .descartes import CurvatureTriple, DSQuintuple, NotDS, enumerate_primitive_ds, quintuple

__all__ = ["CurvatureTriple", "DSQuintuple", "NotDS", "enumerate_primitive_ds", "quintuple"]
__version__ = "0.1.0"
