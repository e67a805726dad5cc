"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LogsineError(Exception):
    """Base class for all errors raised by :mod:`logsine`."""


class DomainError(LogsineError, ValueError):
    """An argument lies outside the set where the operation is defined."""


class DivergenceError(DomainError):
    """The requested series diverges at the given argument."""


class NonConvergenceError(LogsineError, ArithmeticError):
    """A term cap or refinement limit was reached before the tolerance.

    ``partial`` holds the last available result (a series evaluation or a
    quadrature result) so callers can report how far the computation got.
    """

    def __init__(self, message: str, partial: object = None) -> None:
        super().__init__(message)
        self.partial = partial


class IntegrandError(LogsineError, ArithmeticError):
    """An integrand returned a non-finite value at a quadrature node."""

    def __init__(self, message: str, node: object = None, axis: str | None = None) -> None:
        super().__init__(message)
        self.node = node
        self.axis = axis


class RangeOverflowError(LogsineError, OverflowError):
    """A result magnitude exceeds the double-precision range."""


class UnknownIdentityError(LogsineError, KeyError):
    """No identity with the requested id exists in the registry."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown identity"
