from galspin.exact.matrix import Matrix
from galspin.exact.poly import Poly, PolyFrac, polyfrac_eq, symbol, symbols
from galspin.exact.scalar import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, ExactScalar, exact_sqrt, parse_scalar, scalar

__all__ = [
    "ExactScalar", "Poly", "PolyFrac", "Matrix", "polyfrac_eq", "symbol", "symbols",
    "scalar", "parse_scalar", "exact_sqrt", "ZERO", "ONE", "I", "SQRT2", "INV_SQRT2", "HALF",
]
