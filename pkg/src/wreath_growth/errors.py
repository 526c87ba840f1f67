"""Exception hierarchy shared by all modules."""


class WreathGrowthError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class MalformedElementError(WreathGrowthError, ValueError):
    """An element or label does not belong to the algebra it is used with."""

    exit_code = 2


class AssociativityError(WreathGrowthError, ValueError):
    """A multiplication table failed the associativity check."""

    exit_code = 1

    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails on basis triple {triple}")


class HorizonError(WreathGrowthError):
    """A sequence entry beyond the declared horizon was needed."""

    exit_code = 3


class HorizonTooSmallError(WreathGrowthError):
    """No threshold satisfying a horizon-bounded condition exists within the horizon."""

    exit_code = 3


class CapError(WreathGrowthError):
    """A free-monoid product exceeded its length cap."""

    exit_code = 3


class UnsupportedModeError(WreathGrowthError):
    """Exact mode was requested without its preconditions."""

    exit_code = 2


class PreconditionError(WreathGrowthError, ValueError):
    """An operation was called outside its hypotheses."""

    exit_code = 2


class LayerRangeError(WreathGrowthError, IndexError):
    """A growth layer that was never computed was requested."""

    exit_code = 3


class ConfigError(WreathGrowthError):
    """Invalid configuration; carries a source position when one is known."""

    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
