"""Shared exception types."""


class InvalidInputError(ValueError):
    """Malformed or out-of-domain input (bad rank, non-dominant weight, ...)."""


class ResourceCapError(RuntimeError):
    """A computation would exceed the configured resource cap."""


class BudgetExhaustedError(ResourceCapError):
    """A bounded search ran out of budget before reaching a verdict.

    Distinct from a definite "no such element exists" answer.
    """


class CertificationError(AssertionError):
    """An internal cross-check failed (would falsify a verified identity)."""
