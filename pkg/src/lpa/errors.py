"""Exception hierarchy.  Every error raised by the library derives from LpaError."""


class LpaError(Exception):
    """Base class."""


class DivisionByZero(LpaError, ZeroDivisionError):
    pass


class FieldMismatch(LpaError):
    pass


class NotMonic(LpaError):
    pass


class Unsupported(LpaError):
    pass


class UnknownVertex(LpaError, KeyError):
    pass


class NotACycle(LpaError):
    pass


class GraphError(LpaError):
    """Malformed graph description (duplicate names, dangling endpoints)."""


class ShapeMismatch(LpaError):
    def __init__(self, message, edge=None, expected=None, found=None):
        super().__init__(message)
        self.edge = edge
        self.expected = expected
        self.found = found


class GraphMismatch(LpaError):
    pass


class NotASubmodule(LpaError):
    pass


class ZeroRep(LpaError):
    pass


class RepMismatch(LpaError):
    pass


class MalformedMonomial(LpaError):
    pass


class SinkExpansion(LpaError):
    pass


class NotPrime(LpaError):
    pass


class ZeroLambda(LpaError):
    pass


class NotASink(LpaError):
    pass


class NotIrreducible(LpaError):
    pass


class ReducibleTwist(LpaError):
    pass


class ZeroVector(LpaError):
    pass


class CycleMismatch(LpaError):
    pass


class InvalidPrefix(LpaError):
    pass


class BudgetExceeded(LpaError):
    pass


class ParseError(LpaError):
    pass
