"""Exception hierarchy shared by every module of the package."""


class QuiverError(Exception):
    """Base class for all errors raised by :mod:`gentle`."""


class InputError(QuiverError, ValueError):
    """The caller passed something that violates an operation's precondition."""


class CompositionError(InputError):
    """Two paths whose endpoints do not match were composed."""


class UnsupportedInputError(QuiverError):
    """The input is well formed but outside the class an operation handles
    (for example a non-gentle bound quiver passed to a thread computation)."""


class GentlenessViolation(QuiverError):
    """A uniqueness statement that holds for gentle bound quivers failed."""


class NotApplicableError(QuiverError):
    """A transformation was requested at a place where it is not defined."""


class InternalInvariantError(QuiverError):
    """A postcondition the library itself guarantees did not hold."""


class GeneratorError(QuiverError):
    """Random generation gave up after its retry budget."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
