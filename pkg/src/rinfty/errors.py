"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A configured resource cap (search bound, table size, group order) was hit."""
