"""Exception types shared across the package."""


class KdefectError(Exception):
    """Base class for all package-specific errors."""


class FormatError(KdefectError):
    """A hypergraph file violates the format or the structural invariants."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class SolveTimeout(KdefectError):
    """A solver exceeded its deadline; no partial answer is returned."""


class CapExceeded(KdefectError):
    """A search exceeded a configured size cap."""


class CertificateError(KdefectError):
    """A certificate failed independent re-validation."""
