"""Exception types shared across the package."""

from __future__ import annotations


class RatAssocError(Exception):
    """Base class for all errors raised by this package."""


class NotCoprimeError(RatAssocError, ValueError):
    """The slope pair (a, b) is not coprime."""


class BadOrderError(RatAssocError, ValueError):
    """The slope pair (a, b) does not satisfy 0 < a < b."""


class CapExceededError(RatAssocError):
    """An enumeration or materialization would exceed a configured cap."""


class InvalidSourceError(RatAssocError, ValueError):
    """Laser source is not the bottom of a north step, or is the origin."""


class NotAFaceOfHatError(RatAssocError, ValueError):
    """Input diagonal set has crossings or inadmissible members."""


class NotAFaceError(RatAssocError, ValueError):
    """A face argument is not a face of the given complex."""


class NotConeVertexError(RatAssocError):
    """The claimed cone vertex fails its defining condition.

    ``witness`` is a face F' containing the base face such that
    F' + {c} is not in the complex.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ScheduleFailedError(RatAssocError):
    """The collapse schedule diverged from its expected structure.

    Carries the stage coordinates ``(r, q)`` and the violating face, if any.
    """

    def __init__(self, message: str, r=None, q=None, face=None):
        super().__init__(message)
        self.r = r
        self.q = q
        self.face = face


class AdmissibilityViolatedError(RatAssocError):
    """A diagonal guaranteed admissible by a structural result is not.

    Always indicates an internal inconsistency, never bad user input.
    """


class NonIntegralError(RatAssocError):
    """A closed-form count failed its exact divisibility requirement."""


class NotPerfectMatchingError(RatAssocError):
    """Extracted face pairing is not a perfect matching on the difference."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolationError(RatAssocError):
    """A runtime-checked structural invariant failed (internal error)."""
