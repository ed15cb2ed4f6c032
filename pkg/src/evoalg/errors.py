"""Shared exception types."""


class InputError(ValueError):
    """Malformed user input: scalar text, algebra documents, CLI arguments."""


class EnumerationLimitError(RuntimeError):
    """An enumeration would produce more items than the configured limit."""
