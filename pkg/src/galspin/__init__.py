"""Exact verification of the spin structure of the Galilean covariant Dirac field.

Everything is computed over Q(i, sqrt2) with rational functions of the
momenta, so every identity is checked with zero tolerance.
"""
from galspin.errors import GalspinError
from galspin.exact import ExactScalar, Matrix, PolyFrac, symbol, symbols
from galspin.suites import ReportDocument, emit_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ExactScalar", "GalspinError", "Matrix", "PolyFrac", "ReportDocument", "emit_report", "run_suite",
    "symbol", "symbols",
]
