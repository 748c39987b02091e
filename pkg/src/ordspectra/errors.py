"""Exception types shared across the package."""


class OrdspectraError(Exception):
    """Base class for all library errors."""


class DomainError(OrdspectraError):
    """An argument is outside the mathematical domain of the operation."""


class NotAvailable(OrdspectraError):
    """The requested quality level / combination / function does not exist.

    ``message`` is the exact user-facing text; the CLI prints it verbatim.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class OutOfScope(OrdspectraError):
    """A feature named by the interface but deliberately not implemented."""


class DataMissing(OrdspectraError):
    """A provider lookup failed; ``needed`` names the record to ingest."""

    def __init__(self, needed: str):
        super().__init__(f"missing data: {needed}")
        self.needed = needed


class CapacityError(OrdspectraError):
    """A configured cap was exceeded; ``needed`` is the cap that would suffice."""

    def __init__(self, message: str, needed=None):
        super().__init__(message)
        self.needed = needed


class CapExceeded(OrdspectraError):
    """A brute-force construction would exceed the configured order cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class AutGenerationFailed(OrdspectraError):
    """The automorphism search could not complete; never silently approximated."""


class NotPrimePower(OrdspectraError):
    """Field size argument is not a prime power."""


class WrongTwistForm(OrdspectraError):
    """Field size argument has the wrong shape for the requested twisted family."""


class RankOutOfRange(OrdspectraError):
    """Rank argument outside the family's domain."""


class ParseError(OrdspectraError):
    """A data file line could not be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateKey(OrdspectraError):
    """A data file re-defines an already-present record key."""

    def __init__(self, line_no: int, key: str):
        super().__init__(f"line {line_no}: duplicate key {key}")
        self.line_no = line_no
        self.key = key


class PrecisionError(OrdspectraError):
    """A sign decision fell inside the guard band; refusing to guess."""
