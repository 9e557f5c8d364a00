"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called on inputs that violate its contract.

    When the violation is a forbidden induced configuration, ``witness``
    holds the offending vertex set.
    """

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class SizeLimitError(ValueError):
    """Input exceeds the size supported by an exact algorithm."""


class UnsupportedUniformityError(ValueError):
    """Operation is undefined at this uniformity."""


class OshParseError(ValueError):
    """Malformed OSH text; ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NoQFreeGraphError(ValueError):
    """No hypergraph satisfies the requested constraints, so the minimum
    does not exist."""
