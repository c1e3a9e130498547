"""Exception hierarchy for bruhatcap."""


class BruhatCapError(Exception):
    """Base class for all bruhatcap errors."""


class ValidationError(BruhatCapError):
    """Invalid user input: bad type/rank, non-dominant weight, bad format."""


class SizeLimitError(BruhatCapError):
    """A requested enumeration exceeds the configured cap."""


class ConsistencyError(BruhatCapError):
    """An internal invariant failed; indicates broken data or a bug."""
