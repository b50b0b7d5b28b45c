"""
Exception hierarchy for affine_kschur

- Every error raised on purpose derives from KSchurError
- Value-style errors keep ValueError in their bases so callers can catch either
- EXIT_CODES maps each class onto the CLI exit-code contract
"""

from typing import Dict, Optional


class KSchurError(Exception):
    """Base class for library errors."""


class ConfigurationError(KSchurError, ValueError):
    """Unsupported family/rank or malformed settings."""


class DomainError(KSchurError, ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedFormulaError(DomainError):
    """Formula or output format not available for this type or rank."""


class InternalConsistencyError(KSchurError, RuntimeError):
    """A computed object failed a check that holds by theory."""


class VerificationFailure(KSchurError):
    """A property suite found a counterexample."""

    def __init__(self, suite: str, counterexample: Optional[Dict] = None):
        self.suite = suite
        self.counterexample = counterexample or {}
        super().__init__(f"suite '{suite}' failed: {self.counterexample}")


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFICATION = 3

EXIT_CODES = {
    ConfigurationError: EXIT_USAGE,
    DomainError: EXIT_DOMAIN,
    InternalConsistencyError: EXIT_VERIFICATION,
    VerificationFailure: EXIT_VERIFICATION,
}


def exit_code_for(exc: BaseException) -> int:
    """Most specific exit code for an exception (usage errors by default)."""
    for klass in type(exc).__mro__:
        if klass in EXIT_CODES:
            return EXIT_CODES[klass]
    return EXIT_USAGE
