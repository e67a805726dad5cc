"""Polylogarithms, central binomial series and singular quadrature.

The package evaluates log-sine integrals and related closed forms to a
stated tolerance and ships the ``verify`` command that checks a registry
of identities against them.
"""

from .errors import (
    DivergenceError,
    DomainError,
    IntegrandError,
    LogsineError,
    NonConvergenceError,
    RangeOverflowError,
    UnknownIdentityError,
)
from .numeric_core import ToleranceSpec

__version__ = "0.1.0"

__all__ = [
    "ToleranceSpec",
    "LogsineError",
    "DomainError",
    "DivergenceError",
    "NonConvergenceError",
    "IntegrandError",
    "RangeOverflowError",
    "UnknownIdentityError",
    "__version__",
]
