"""
Error hierarchy for the simulation engine.

Every error carries a human-readable ``detail`` and the process exit code the
command line reports when the error escapes a command.
"""


class PowerShiftError(Exception):
    """Base error; ``detail`` is the message shown to the user."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ParamError(PowerShiftError):
    """A production-model parameter violates its invariant."""


class DomainError(PowerShiftError):
    """An input lies outside the domain of a log or power term."""


class ZeroTotalLabor(PowerShiftError):
    """Productivity requested with L + L_agi = 0."""


class ZeroTotalIncome(PowerShiftError):
    """Power shift requested while total factor income is zero."""


class NonSmoothFamily(PowerShiftError):
    """Finite differences requested for a non-differentiable family."""


class RateOutOfRange(PowerShiftError):
    """A policy rate lies outside its admissible interval."""


class NegativeLevy(PowerShiftError):
    """A fixed levy below zero."""


class ConfigParseError(PowerShiftError):
    """The scenario file is not valid TOML."""

    def __init__(self, detail: str, line: int | None = None, column: int | None = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{detail}{location}")
        self.line = line
        self.column = column


class ConfigValidationError(PowerShiftError):
    """The scenario file parses but names an unknown key or an invalid value."""

    def __init__(self, detail: str, key: str | None = None):
        super().__init__(detail)
        self.key = key


class ValidationFailed(PowerShiftError):
    """At least one analytic marginal product disagrees with finite differences."""

    exit_code = 2


class OutputError(PowerShiftError):
    """An artifact could not be written to the output directory."""
