"""
Exception hierarchy for the QC-LDPC toolkit.
"""

from typing import Optional


class CodeError(Exception):
    """Base class for every error raised by the package."""


class DimensionError(CodeError, ValueError):
    """Operands have incompatible shapes or ring sizes."""


class InvalidParameterError(CodeError, ValueError):
    """
    A guardrail rejected the given parameters.

    The full validation result is kept on `result` so callers can
    render every violation, not only the first.
    """

    def __init__(self, result, context: str = "Invalid parameters"):
        self.result = result
        message = f"{context}: " + "; ".join(result.errors)
        super().__init__(message)


class UnknownCodeError(CodeError, KeyError):
    """No built-in code or readable file matches the given name."""

    def __str__(self):
        return self.args[0] if self.args else "unknown code"


class ExponentFormatError(CodeError, ValueError):
    """Malformed exponent-matrix or binary-matrix text."""

    def __init__(self, message: str, line: int, column: int = 1, path: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class TrivialCodeError(CodeError, ValueError):
    """The code has no nonzero codeword (or the check matrix is zero)."""


class ConfigurationError(CodeError):
    """An environment variable holds a value that cannot be used."""
