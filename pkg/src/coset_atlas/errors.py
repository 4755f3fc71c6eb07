"""Exception hierarchy shared by all modules."""


class CosetAtlasError(Exception):
    """Base class for every error raised by this package."""


# field arithmetic and linear algebra
class NonPrimeCharacteristic(CosetAtlasError, ValueError):
    pass


class ReducibleModulus(CosetAtlasError, ValueError):
    pass


class UnsupportedOrder(CosetAtlasError, ValueError):
    pass


class DivisionByZero(CosetAtlasError, ZeroDivisionError):
    pass


class MixedFields(CosetAtlasError, TypeError):
    pass


class InconsistentSystem(CosetAtlasError, ValueError):
    pass


# projective geometry
class ZeroVector(CosetAtlasError, ValueError):
    pass


class CollinearPoints(CosetAtlasError, ValueError):
    pass


class EqualPoints(CosetAtlasError, ValueError):
    pass


class PointOnCubic(CosetAtlasError, ValueError):
    pass


class InvalidResidue(CosetAtlasError, ValueError):
    pass


class GeometryInconsistency(CosetAtlasError, AssertionError):
    """A structural property of the cubic failed; indicates a bug upstream."""


# code
class SingularQuadruple(CosetAtlasError, AssertionError):
    pass


class LengthMismatch(CosetAtlasError, ValueError):
    pass


class ClassResidueMismatch(CosetAtlasError, ValueError):
    pass


class IllegalB3(CosetAtlasError, ValueError):
    pass


class LawViolation(CosetAtlasError, AssertionError):
    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


# oracles
class WeightTooLarge(CosetAtlasError, ValueError):
    pass


class RankDeficient(CosetAtlasError, ValueError):
    pass


class ScopeExceeded(CosetAtlasError, ValueError):
    pass


class NoRepresentativeWithin3(CosetAtlasError, AssertionError):
    pass


# reports
class FixtureMissing(CosetAtlasError, LookupError):
    pass
