"""Exceptions raised by straight, each tied to a CLI exit code."""


class StraightError(Exception):
    """Base class for all straight errors."""
    exit_code = 1


class ValidationError(StraightError, ValueError):
    """Malformed or mismatched input: shapes, contents, fillings, indices."""
    exit_code = 2


class ResourceCapError(StraightError):
    """A configured cap (paths, oracle dimension, rewrite steps) was exceeded."""
    exit_code = 3


class DisagreementError(StraightError):
    """Two methods that must agree produced different results."""
    exit_code = 4
