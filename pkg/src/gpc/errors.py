"""Exception types shared across the package."""


class GpcError(Exception):
    """Base class for all package-specific errors."""


class ParseError(GpcError):
    """Malformed input text (graph files, table files, matched-graph JSON)."""


class CapacityError(GpcError):
    """A structural limit was exceeded (edge cap, matching-size cap)."""


class BudgetError(GpcError):
    """An enumeration would exceed its work budget."""


class ValidationError(GpcError):
    """A constructed object violates its structural contract."""


class IntegrityError(GpcError):
    """Internal consistency failure, e.g. a differential that does not square to zero."""


class TheoryViolationError(GpcError):
    """A cross-identity that must hold mathematically failed.

    Raising this means the implementation is wrong somewhere; it is never an
    expected runtime condition.
    """
