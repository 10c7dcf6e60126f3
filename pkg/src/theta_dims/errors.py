"""Exception types shared across the package."""


class ThetaDimsError(Exception):
    """Base class for all errors raised by this package."""


class NotAGroup(ThetaDimsError):
    """A Cayley table violates a group axiom; the message names the first
    violated axiom and a witness."""


class FixtureMismatch(ThetaDimsError):
    """Reference element data does not match the constructed group."""


class NonIntegralDimension(ThetaDimsError):
    """An averaged character sum failed to be a nonnegative integer.

    This is an internal consistency trap: no valid input can trigger it.
    """


class SimplificationMismatch(ThetaDimsError):
    """The reduced single-sum route disagrees with the direct coset sum."""


class MixedRadicand(ThetaDimsError):
    """Arithmetic attempted between quadratic values over different radicands."""


class ParseError(ThetaDimsError):
    """A data file is malformed."""


class OrthogonalityViolation(ThetaDimsError):
    """A character table fails exact row orthogonality."""


class NonRealValue(ThetaDimsError):
    """A declared table value cannot live in the stated real quadratic field."""


class IndicatorOutOfRange(ThetaDimsError):
    """A squared-power average landed outside {-1, 0, +1} (table corruption)."""


class GeneratorsDontGenerate(ThetaDimsError):
    """The supplied generating set does not generate the whole group."""


class TooLarge(ThetaDimsError):
    """Input exceeds a size guard for an exact dense computation."""


class ProjectorNotIdempotent(ThetaDimsError):
    """The averaged action matrix failed P*P == P (bug trap)."""


class HalfwayPoint(ThetaDimsError):
    """A nearest-integer rounding hit an exact .5 tie (provably impossible)."""
