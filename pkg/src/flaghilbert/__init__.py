"""Exact Hilbert polynomials and Hilbert series of partial flag varieties G/P."""

from .analysis import Analysis, analyze
from .dims import c_ratios, flag_dimension, hilbert_polynomial, weyl_dim
from .rootsys import DominantWeight, SimpleType, build_root_system
from .series import SeriesNumerator, numerator_from_dims

__all__ = [
    "Analysis",
    "DominantWeight",
    "SeriesNumerator",
    "SimpleType",
    "analyze",
    "build_root_system",
    "c_ratios",
    "flag_dimension",
    "hilbert_polynomial",
    "numerator_from_dims",
    "weyl_dim",
]
