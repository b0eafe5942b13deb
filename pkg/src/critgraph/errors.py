"""Exception types shared across modules."""

from __future__ import annotations


class SizeCapError(ValueError):
    """An input is larger than the configured cap for an exact routine."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class InconsistencyError(AssertionError):
    """A computed result contradicts a proven structural property.

    Raised instead of returning a wrong answer; it signals a bug in this
    package or a counterexample to the property being checked.
    """
