"""Exception types shared across the toolkit."""


class ArityAspError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ArityAspError):
    """Malformed program or CNF text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ArityFormatError(ArityAspError):
    """Malformed arity-set file."""


class SchemaError(ArityAspError):
    """Operation applied to an arity set with the wrong schema."""


class InvalidAritySet(ArityAspError):
    """Explicit arity sets may only contain finite arities."""


class NotPositive(ArityAspError):
    """Operation requires a program without negative body literals."""


class OracleLimitExceeded(ArityAspError):
    """An exhaustive check would exceed the configured cap."""


class EngineMismatch(ArityAspError):
    """Program lies outside the class the requested engine is sound for."""


class ShapeError(ArityAspError):
    """CNF input violates the clause shape a reduction requires."""


class PreconditionError(ArityAspError):
    """Reduction-specific precondition violated."""


class AtomNotFresh(ArityAspError):
    """An atom supplied as fresh already occurs in the program."""
