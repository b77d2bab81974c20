"""Exception hierarchy shared by every module."""

from __future__ import annotations


class InterchangeError(Exception):
    """Base class for all library errors."""


class DomainError(InterchangeError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ValidationError(InterchangeError, ValueError):
    """A structure violates one of its invariants."""


class InfeasibleError(InterchangeError):
    """A parameter search found no admissible solution."""


class InternalError(InterchangeError, AssertionError):
    """A consistency check that should never fail did fail."""
