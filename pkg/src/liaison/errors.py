"""Exception hierarchy shared by all liaison modules."""


class LiaisonError(Exception):
    """Base class for everything raised deliberately by this package."""


class ParseError(LiaisonError):
    """Malformed ring or polynomial text; carries a 1-based position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class RingMismatchError(LiaisonError):
    """Operands belong to different rings."""


class FieldMismatchError(LiaisonError):
    """Operands belong to different coefficient fields."""


class ResourceLimitError(LiaisonError):
    """A pair-reduction or degree cap was exceeded; never silent truncation."""


class PreconditionError(LiaisonError):
    """An operation's documented precondition does not hold for the input."""


class InternalCheckError(LiaisonError):
    """A redundant internal consistency check failed; indicates a bug."""
