"""
Exception hierarchy for sallykit.

Every error carries the CLI exit code it maps to: input problems exit with
2, resource and stabilization failures with 3. Verification mismatches are
not exceptions (they produce a failing report and exit code 1).
"""

from typing import Any, Optional


class SallyKitError(Exception):
    """Base class for all sallykit errors."""

    exit_code = 2


class InputError(SallyKitError):
    """Malformed or inconsistent input."""

    exit_code = 2


class ParseError(InputError):
    """Expression or document parse failure with a source position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"line {line}, column {column}: {message}")


class DocumentError(InputError):
    """A ring document is structurally invalid."""


class RingMismatchError(InputError):
    """Operands live over different rings."""


class ZeroPolynomialError(InputError):
    """An operation that needs a nonzero polynomial got zero."""


class NegativeExponentError(InputError):
    """Ideal powers must be nonnegative."""


class ZeroIdealError(InputError):
    """Colon by the zero ideal is undefined."""


class NonMonomialError(InputError):
    """The monomial oracle received a non-monomial generator."""


class ContainmentError(InputError):
    """A required ideal containment K ⊆ J does not hold."""

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class ComputationError(SallyKitError):
    """A computation could not be completed within its limits."""

    exit_code = 3


class ResourceLimitError(ComputationError):
    """A degree or truncation ceiling was exceeded."""


class NotZeroDimensionalError(ComputationError):
    """The ideal is not primary to the maximal ideal."""


class InsufficientWindowError(ComputationError):
    """Too few stable values to fit a Hilbert polynomial."""


class NoStabilizationError(ComputationError):
    """An ascending chain or series did not stabilize before its cap."""


class DimensionMismatchError(ComputationError):
    """Detected Krull dimension disagrees with the expected one."""


class NotAReductionError(ComputationError):
    """Q is not a reduction of I within the searched range."""

    def __init__(self, message: str, largest_checked: Optional[int] = None):
        self.largest_checked = largest_checked
        super().__init__(message)
