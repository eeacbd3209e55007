"""Exception types raised across the package."""


class GKTError(ValueError):
    """Base class for invalid input to any operation."""


class ParseError(GKTError):
    """Malformed text. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = (", ".join(where) + ": ") if where else ""
        super().__init__(prefix + message)


class DimensionError(GKTError):
    """Strategy, partition or profile sizes do not fit the game."""


class SpecError(GKTError):
    """Invalid reduction data: bad partition, profile, or misalignment."""


class EmbedError(GKTError):
    """A strategy's conditional on a positive-mass block differs from the profile."""


class GuardExceeded(GKTError):
    """An enumeration was asked to run past its size limit."""

    def __init__(self, name, limit, actual):
        self.name = name
        self.limit = limit
        self.actual = actual
        super().__init__(f"guard {name} exceeded: {actual} > limit {limit}")
