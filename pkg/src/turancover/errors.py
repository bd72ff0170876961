"""Shared exception types."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad arity, out-of-range index, ...)."""


class ScaleGuardError(RuntimeError):
    """An exact computation was refused because it exceeds the desk-scale cap."""


class ClaimCheckError(AssertionError):
    """An internal cross-check of a verified theorem failed (should never fire)."""
