"""Shared exception root so callers can catch all library errors at once."""


class FuzzautError(ValueError):
    """Base class for every validation or configuration error raised here."""
