"""Exception types shared across the package."""


class TomolinkError(Exception):
    """Base class for all tomolink errors."""


class MalformedInput(TomolinkError):
    """Input document or argument is structurally invalid."""


class ValidationError(TomolinkError):
    """Graph document violates a network invariant."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


class EmptyInterior(TomolinkError):
    """The network has no interior node."""


class TooSmall(TomolinkError):
    """Operation requires a larger node set."""


class CapExceeded(TomolinkError):
    """Path enumeration would exceed the configured cap."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(f"path count exceeds cap {cap} (enumerated {partial_count} so far)")
        self.cap = cap
        self.partial_count = partial_count


class InteriorDisconnected(TomolinkError):
    """Some first/last hop pair has no connecting path through the interior."""


class UnknownColumn(TomolinkError):
    """Requested link is not a column of the matrix."""


class InconsistentMeasurements(TomolinkError):
    """Measurement vector lies outside the column space of the matrix."""


class MissingWeight(TomolinkError):
    """A traversed link has no assigned weight."""


class PreconditionFailed(TomolinkError):
    """Operation preconditions (connectivity conditions, link class) are not met."""


class Infeasible(TomolinkError):
    """Generator constraints cannot be satisfied."""


class MalformedCertificate(TomolinkError):
    """Certificate structure cannot be interpreted against the network."""


class SearchExhausted(TomolinkError):
    """Exhaustive search found no witness although one is guaranteed to exist."""


class NotFound(TomolinkError):
    """Search completed without finding the guaranteed object."""


class SearchSpaceTooLarge(TomolinkError):
    """Search exceeded the configured ceiling."""
