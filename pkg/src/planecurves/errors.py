"""Shared exception types."""


class DiagnosticError(RuntimeError):
    """An internal consistency or termination-bound check failed; the result
    would not be trustworthy, so nothing is returned."""


class NonReducedCurveError(ValueError):
    """The input polynomial has a repeated factor."""
