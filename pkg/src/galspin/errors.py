"""Exception types raised across the package."""


class GalspinError(Exception):
    """Base class for errors raised by galspin."""


class DivisionByZero(GalspinError, ZeroDivisionError):
    pass


class ShapeMismatch(GalspinError, ValueError):
    pass


class NotRepresentable(GalspinError, ValueError):
    """A value (typically a square root) leaves the number field."""


class ConventionRejected(GalspinError):
    pass


class NonPolynomialAmplitude(GalspinError, ValueError):
    pass


class ZeroMassSector(GalspinError, ValueError):
    pass


class UnsupportedRotationAngle(GalspinError, ValueError):
    pass


class DegenerateFrame(GalspinError, ValueError):
    pass


class InvalidMass(GalspinError, ValueError):
    pass


class OffShell(GalspinError, ValueError):
    pass


class DegenerateCombination(GalspinError, ValueError):
    pass


class ZeroMass(GalspinError, ValueError):
    pass


class DimensionTooLarge(GalspinError, ValueError):
    pass


class UndefinedCovariantSpin(GalspinError):
    pass


class UnknownSuite(GalspinError, LookupError):
    pass


class ParseError(GalspinError, ValueError):
    pass
