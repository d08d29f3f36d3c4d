"""Exception hierarchy shared by every icg module."""


class IcgError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IcgError):
    """An argument is outside the mathematical domain of the operation."""


class ValidationError(IcgError):
    """A composite value (divisor set, instance) failed validation."""


class ResourceLimitError(IcgError):
    """A configured enumeration or size cap would be exceeded."""
