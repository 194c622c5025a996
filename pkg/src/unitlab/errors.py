class UnitlabError(Exception):
    """Base class for all library errors."""


class InvalidInput(UnitlabError, ValueError):
    pass


class CapacityError(UnitlabError):
    """An enumeration or arithmetic size cap was exceeded."""


class InconsistencyError(UnitlabError):
    """Computed data violates an invariant that must hold for valid input."""
