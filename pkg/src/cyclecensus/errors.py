"""Exception types raised across the package."""


class CensusError(Exception):
    """Base class for all package errors."""


class ResourceCapError(CensusError, ValueError):
    """A size parameter exceeds its configured resource guard."""


class UnsupportedParameterError(CensusError, ValueError):
    pass


class OutOfRangeError(CensusError, ValueError):
    pass


class NormalizationError(CensusError, ValueError):
    """Normalizing by P(1) is impossible because the family is empty."""


class InsufficientNError(CensusError, ValueError):
    """A required root could not be certified at this length."""


class PropertyViolationError(CensusError, RuntimeError):
    """A mathematical property that must hold was observed to fail."""


class IdentityViolationError(PropertyViolationError):
    pass
