"""Exception hierarchy shared by every solver entry point."""


class ParityError(Exception):
    """Base class for errors raised by parityops."""


class InputError(ParityError, ValueError):
    """An argument violates a documented precondition."""


class EmptyGameError(InputError):
    """An operation that needs at least one vertex received an empty game."""


class SizeLimitError(InputError):
    """A game exceeds the size cap of an exponential-time routine."""


class ContractViolation(ParityError):
    """A half-solver returned an outcome that breaks its contract."""


class GenerationError(ParityError):
    """A generator specification cannot produce a valid instance."""


class PGSolverSyntaxError(InputError):
    """Malformed PGSolver or solution text, with 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
