"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operand shapes do not conform."""


class DomainError(ValueError):
    """Input is outside an operation's mathematical domain."""


class InsufficientDataError(ValueError):
    """Too few samples for the requested statistic."""


class DataFormatError(ValueError):
    """A serialized artifact (checkpoint, embedding file, config) is malformed."""
