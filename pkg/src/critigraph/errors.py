"""Exception types shared across the package."""


class CritigraphError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(CritigraphError):
    """Input exceeds a hard size guard (vertex cap, search-space cap)."""


class BoundsError(CritigraphError):
    """A vertex id or vertex-set bit lies outside 0..order-1."""


class LoopEdgeError(CritigraphError):
    """Self-loops are not representable."""


class DomainError(CritigraphError):
    """A documented precondition of an operation does not hold."""


class InvariantError(CritigraphError):
    """A runtime-checked internal invariant failed.

    Carries enough detail to reconstruct the offending instance; seeing one
    of these means a bug, not bad user input.
    """


class ParseError(CritigraphError):
    """Malformed input text; the message names the offending line."""


class ValidationError(CritigraphError):
    """Well-formed input that violates a semantic constraint."""
