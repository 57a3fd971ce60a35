"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ConicLineError(Exception):
    """Base class for every error raised by this package."""


# -- arithmetic ---------------------------------------------------------------

class DivisionByZero(ConicLineError, ZeroDivisionError):
    """Division by zero, or by a zero divisor of a (reducible) number field."""


class FieldMismatch(ConicLineError, TypeError):
    """Operands live in different fields."""


class BadPrime(ConicLineError, ValueError):
    """A prime is unusable for modular reduction of the given data."""


# -- polynomials --------------------------------------------------------------

class DegenerateLine(ConicLineError, ValueError):
    """A line with coefficient triple (0, 0, 0)."""


# -- arrangements -------------------------------------------------------------

class ValidationError(ConicLineError, ValueError):
    """An arrangement failed validation.

    ``issues`` lists every problem found, not only the one that was raised.
    """

    def __init__(self, message: str, issues=None):
        super().__init__(message)
        self.issues = list(issues) if issues is not None else [self]


class SingularConic(ValidationError):
    def __init__(self, index: int):
        super().__init__(f"component {index} is a singular conic (determinant 0)")
        self.index = index


class DuplicateComponent(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"components {i} and {j} are projectively equal")
        self.pair = (i, j)


class ZeroComponent(ValidationError):
    def __init__(self, index: int):
        super().__init__(f"component {index} has all coefficients zero")
        self.index = index


class ArrangementFormatError(ValidationError):
    """The arrangement file could not be parsed."""


class UnknownName(ConicLineError, KeyError):
    """No catalog entry with this name."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class ExactUnavailable(ConicLineError):
    """The exact (non-modular) route cannot handle this input."""


# -- internal soundness gates ------------------------------------------------

class SoundnessError(ConicLineError):
    """Two independent computations that must agree did not."""


class PrimeDisagreement(SoundnessError):
    """Censuses computed modulo different primes differ."""


class CensusDisagreement(SoundnessError):
    """Exact and modular censuses differ."""


class RouteDisagreement(SoundnessError):
    """The saturation route and the Tjurina-number route disagree on freeness."""


class CombinatorialViolation(SoundnessError):
    """The pairwise-intersection count identity failed on a census."""


class StabilizationOverflow(ConicLineError):
    """The saturation exponent grew past its bound without stabilizing."""


# -- bounds -------------------------------------------------------------------

class AlphaOutOfRange(ConicLineError, ValueError):
    """The orbifold parameter lies outside the validity range of the formula."""
