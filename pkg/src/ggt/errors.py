"""Shared exception types."""


class ResourceBoundExceeded(RuntimeError):
    """An enumeration or search hit its configured size ceiling."""


class SearchExhausted(ResourceBoundExceeded):
    """A search scanned its whole range without finding a witness."""
