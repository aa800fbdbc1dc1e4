"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CongmonError(Exception):
    """Base class for library errors."""


class ParseError(CongmonError, ValueError):
    """Malformed scalar, matrix or parameter input."""


class PreconditionError(CongmonError, ValueError):
    """An operation was called outside its domain (shape, field, range)."""


class FieldMismatchError(PreconditionError):
    """Two operands live over different fields."""


class VerificationError(CongmonError, AssertionError):
    """An internal exact check did not hold."""
