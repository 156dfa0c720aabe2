"""Exception types shared across the package."""


class SizeError(ValueError):
    """Matrix or lattice size outside the operation's domain."""


class PreconditionError(ValueError):
    """Input violates a documented precondition of the operation."""


class SingularMatrixError(ArithmeticError):
    """Square system has no unique solution.  Carries the rank found."""

    def __init__(self, rank, message=None):
        super().__init__(message or f"singular system (rank {rank})")
        self.rank = rank


class ConstructionError(RuntimeError):
    """Impulse-polynomial search exhausted every kernel vector and fallback."""


class InvariantError(RuntimeError):
    """An internal consistency condition failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """Malformed matrix or polynomial text.  Carries 1-based line/column when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column
