"""Exception types shared across the toolkit."""


class SeqCMError(Exception):
    """Base class for all toolkit errors."""


class RingMismatchError(SeqCMError, ValueError):
    """Operands live in different polynomial rings."""


class PreconditionError(SeqCMError, ValueError):
    """An operation was called outside its domain."""


class InvariantViolation(SeqCMError, RuntimeError):
    """An internal consistency check failed. Always a bug."""


class ParseError(SeqCMError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
