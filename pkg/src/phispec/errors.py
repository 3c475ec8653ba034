"""Shared exception types."""


class NumericError(ArithmeticError):
    """Numeric computation failed (non-finite input, solver non-convergence)."""
