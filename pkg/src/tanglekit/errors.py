"""Exception types shared across the package."""


class TangleError(Exception):
    """Base class for all tangle-calculus errors."""


class InfinityInputError(TangleError):
    """An operation that requires a finite fraction received the infinity tangle."""


class NonCoprimeError(TangleError):
    """A two-bridge pair b(p, q) was requested with gcd(p, q) > 1."""


class NormalFormRequiredError(TangleError):
    """A Montesinos operation needs its input in two-summand normal form."""


class UnsupportedTangleError(TangleError):
    """The expression is outside the supported tangle algebra."""


class DomainError(TangleError, ValueError):
    """A parameter lies outside its documented domain."""


class ScaleExceededError(TangleError):
    """A diagram exceeds the crossing budget of the invariant oracle."""


class OpenDiagramError(TangleError):
    """A closed-diagram invariant was requested for a tangle with endpoints."""


class NotATangleError(TangleError):
    """A tangle-only operation was applied to a closed diagram."""


class ParseError(TangleError):
    """Tangle notation failed to parse.

    Carries the character position at which parsing stopped.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
