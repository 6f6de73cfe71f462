"""Exception hierarchy."""
from __future__ import annotations

from pathlib import Path


class PhotonicError(Exception):
    """Base class for all simulator errors."""


class InvalidParameterError(PhotonicError, ValueError):
    """A physical or numerical parameter violates its precondition."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class PositionOutOfRangeError(InvalidParameterError):
    """Position lies outside [0, total_length] of the stack."""


class SingularSystemError(PhotonicError):
    """The scalar boundary system has no unique solution."""


class DegenerateFitError(PhotonicError):
    """Not enough periods to fit an envelope decay."""


class InvalidSeriesError(PhotonicError, ValueError):
    """A plot series is too short or malformed."""


class ConfigError(PhotonicError):
    """Run configuration could not be loaded."""


class ConfigParseError(ConfigError):
    """Configuration text is not a valid JSON object."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class ConfigValidationError(ConfigError):
    """Configuration parsed but a field is out of its allowed range."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class OutputWriteError(PhotonicError):
    """An output file could not be written."""

    def __init__(self, path: Path, reason: str):
        self.path = path
        super().__init__(f"{path}: {reason}")
