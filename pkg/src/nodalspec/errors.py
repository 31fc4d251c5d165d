"""Exception hierarchy shared by every module of the package."""


class NodalSpecError(Exception):
    """Base class for all errors raised by nodalspec."""


class BadParams(NodalSpecError, ValueError):
    pass


class OutOfRange(BadParams):
    pass


class SelfLoop(BadParams):
    pass


class DuplicateEdge(BadParams):
    pass


class NoSuchEdge(BadParams):
    pass


class Disconnected(NodalSpecError):
    pass


class OutOfDomain(NodalSpecError, ValueError):
    pass


class ConvergenceFailure(NodalSpecError, ArithmeticError):
    pass


class RankDeficient(NodalSpecError, ArithmeticError):
    pass


class PreconditionViolated(NodalSpecError):
    pass


class TheoremViolation(NodalSpecError):
    """A numerical outcome that contradicts a proven statement.

    ``details`` carries everything needed to reproduce the case.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}


class NotEdgeDisjoint(BadParams):
    pass


class NotCertified(NodalSpecError):
    pass


class DimensionMismatch(BadParams):
    pass


class SeedMismatch(BadParams):
    pass


class ParseError(NodalSpecError, ValueError):
    """Malformed graph input; ``offset`` is the byte position of the problem."""

    def __init__(self, reason, offset):
        super().__init__(f"{reason} (at byte {offset})")
        self.reason = reason
        self.offset = offset
