"""Exception types raised across the package."""

from __future__ import annotations


class GoppaChainError(Exception):
    """Base class for every error raised by goppachain."""


class UnsupportedFieldError(GoppaChainError, ValueError):
    pass


class InvalidModulusError(GoppaChainError, ValueError):
    pass


class FieldDomainError(GoppaChainError, ZeroDivisionError):
    """Inverse of zero, or a non-positive power of zero."""


class InvalidPolynomialError(GoppaChainError, ValueError):
    pass


class DegenerateSubstitutionError(GoppaChainError, ValueError):
    pass


class DegenerateScaleError(GoppaChainError, ValueError):
    pass


class InvalidParameterError(GoppaChainError, ValueError):
    pass


class SubfieldViolationError(InvalidParameterError):
    pass


class ShapeError(GoppaChainError, ValueError):
    pass


class CapExceededError(GoppaChainError):
    def __init__(self, k: int, cap: int):
        super().__init__(f"dimension k={k} exceeds enumeration cap {cap}")
        self.k = k
        self.cap = cap


class InconsistentLocationError(GoppaChainError, ValueError):
    pass


class UnsupportedCheckError(GoppaChainError, ValueError):
    pass


class InvalidMapError(GoppaChainError, ValueError):
    pass


class InapplicableError(GoppaChainError, ValueError):
    pass


class ExhaustionError(GoppaChainError, RuntimeError):
    pass


class InvalidWitnessParameterError(GoppaChainError, ValueError):
    pass


class LocationMismatchError(GoppaChainError, ValueError):
    pass


class NotAnAutomorphismError(GoppaChainError, ValueError):
    pass


class InvarianceViolationError(GoppaChainError):
    pass
