"""Exception hierarchy.

Usage errors derive from :class:`ValueError`; outcomes that are a
mathematical answer rather than bad input (a code outside a fiber, a
collision) derive from :class:`MathematicalFailure` so callers such as the
CLI can tell them apart.
"""


class GoppaError(Exception):
    """Base class for every error raised by this package."""


class MathematicalFailure(GoppaError):
    """The computation ran but the mathematical answer is negative."""


# fields
class NotPrime(GoppaError, ValueError):
    pass


class ReducibleModulus(GoppaError, ValueError):
    pass


class BadArity(GoppaError, ValueError):
    pass


class FieldMismatch(GoppaError, ValueError):
    pass


class UnsupportedField(GoppaError, ValueError):
    pass


class InfiniteField(UnsupportedField):
    pass


class FieldDivisionByZero(GoppaError, ZeroDivisionError):
    pass


# linear algebra / codes
class ShapeError(GoppaError, ValueError):
    pass


class FullSpace(GoppaError, ValueError):
    pass


# level structures
class BadLength(GoppaError, ValueError):
    pass


class DegreeOutOfRange(GoppaError, ValueError):
    pass


class InvalidStructure(GoppaError, ValueError):
    pass


class PointMismatch(GoppaError, ValueError):
    pass


class DegenerateConfiguration(GoppaError, ValueError):
    pass


class DivisorMeetsPoints(GoppaError, ValueError):
    pass


# pluecker
class ShapeMismatch(GoppaError, ValueError):
    pass


class FirstCoordinateZero(GoppaError, ValueError):
    pass


class NotInFiber(MathematicalFailure):
    pass


class ZeroCoordinateObstruction(NotInFiber):
    """Every usable pair of Plücker coordinates vanished."""


# analytics / audits
class ParameterViolation(GoppaError, ValueError):
    pass


class FieldTooSmall(GoppaError, ValueError):
    pass
