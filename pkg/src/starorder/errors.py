"""Exception types shared across the package."""


class StarOrderError(Exception):
    """Base class for every error raised by this package."""


class DimMismatch(StarOrderError):
    """Operands live in spaces of different dimension."""


class ConvergenceFailure(StarOrderError):
    """The eigensolver did not converge."""


class NotOrthogonal(StarOrderError):
    """Orthogonal sum requested for a non-orthogonal pair; the operation is undefined."""


class NotLess(StarOrderError):
    """Segment complement requested for a pair outside the order."""


class NotUpperBound(StarOrderError):
    """A family member is not below the supplied bound."""

    def __init__(self, index, message=None):
        super().__init__(message or f"family member {index} is not below the given bound")
        self.index = index


class Conflict(StarOrderError):
    """Two partial functions disagree on a shared index, so their union is undefined."""

    def __init__(self, index):
        super().__init__(f"values disagree at index {index!r}")
        self.index = index


class UnknownElement(StarOrderError):
    """A label that does not belong to the poset."""


class OrthoMissing(StarOrderError):
    """The poset carries no orthogonality relation."""


class PosetInvalid(StarOrderError):
    """Poset data violates a required law; the message names it."""


class MeetUnavailable(StarOrderError):
    """No meet hook and the carrier is not finite."""


class OrthogonalityUnavailable(StarOrderError):
    """The structure exposes no orthogonality hook."""


class SubtractionUnavailable(StarOrderError):
    """The structure exposes no subtraction hook."""


class InfiniteCarrier(StarOrderError):
    """An exhaustive-only check was asked of a sampled carrier."""


class ParseError(StarOrderError):
    """Malformed JSON input."""
