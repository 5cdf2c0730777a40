"""Exception hierarchy shared by every module.

The command line maps these onto exit codes: domain and capacity errors
exit with 1, malformed input exits with 2.
"""

from __future__ import annotations


class QRationalError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(QRationalError, ValueError):
    """An input is well formed but outside the region where an operation is defined."""


class MalformedInputError(QRationalError, ValueError):
    """Text or JSON input that cannot be parsed."""


class CapacityError(QRationalError):
    """A brute-force routine was asked for more than its size bound allows."""


class NotDivisibleError(QRationalError, ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""

    def __init__(self, remainder, message: str = "not divisible"):
        super().__init__(f"{message}; remainder {remainder}")
        self.remainder = remainder
