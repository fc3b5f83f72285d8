"""Exact umbral calculus on a finite-site model of the distribution space."""

from .errors import DimensionError, PreconditionError, UmbraError
from .series1d import PowerSeries1D
from .symtensor import SiteSpace, SymLinearMap, SymTensor
from .tenseries import ScalarTensorSeries, SymToVecMap, VectorTensorSeries

__all__ = [
    "DimensionError",
    "PowerSeries1D",
    "PreconditionError",
    "ScalarTensorSeries",
    "SiteSpace",
    "SymLinearMap",
    "SymTensor",
    "SymToVecMap",
    "UmbraError",
    "VectorTensorSeries",
]
__version__ = "0.1.0"
