"""Exact character computations for critical-level affine Lie algebras."""

from .rootdata import CartanType, RootSystem, build_root_system, pairing
from .charseries import CharSeries, QSeries, Trunc

__version__ = "0.1.0"

__all__ = ["CartanType", "CharSeries", "QSeries", "RootSystem", "Trunc",
           "build_root_system", "pairing"]
