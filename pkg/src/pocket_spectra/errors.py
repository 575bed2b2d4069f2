"""Exception hierarchy shared by every module."""


class PocketSpectraError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(PocketSpectraError, ValueError):
    pass


class InvalidEdge(PocketSpectraError, ValueError):
    pass


class InvalidInput(PocketSpectraError, ValueError):
    pass


class SizeLimitExceeded(PocketSpectraError):
    pass


class Graph6ParseError(PocketSpectraError, ValueError):
    """Malformed graph6 text; ``offset`` is the index of the bad byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class AsymmetricPocket(PocketSpectraError, ValueError):
    """The specified edge ``uv`` has ``H - u`` not isomorphic to ``H - v``."""


class PreconditionViolation(PocketSpectraError, ValueError):
    pass


class ExcludedEigenvector(PocketSpectraError, ValueError):
    pass


class ConvergenceError(PocketSpectraError, ArithmeticError):
    pass


class InternalError(PocketSpectraError, RuntimeError):
    pass
