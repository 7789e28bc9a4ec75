"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can report
it without parsing message text.
"""

from __future__ import annotations


class BGError(Exception):
    """Base class for all semantic or precondition failures."""

    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidPattern(BGError):
    code = "invalid_pattern"


class PreconditionError(BGError):
    code = "precondition"


class NotPalindromic(BGError):
    code = "not_palindromic"


class InexactDivision(BGError):
    code = "inexact_division"


class DescriptorSyntaxError(ValueError):
    """Raised by the descriptor parser; ``position`` is a 0-based offset."""

    code = "syntax"

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
