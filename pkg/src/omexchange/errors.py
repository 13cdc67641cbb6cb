"""Exception hierarchy shared by all oracles and searches."""


class OMError(Exception):
    """Base class for every error raised by omexchange."""


class AnchorInBasis(OMError):
    pass


class AnchorNotSpanned(OMError):
    pass


class NotEmbracing(OMError):
    pass


class NotATree(OMError):
    pass


class PreconditionViolated(OMError):
    pass


class PostconditionFailed(OMError):
    """A constructive exchange step produced a tree that breaks its own postcondition.

    Never expected in practice; raised instead of silently returning a bad tree.
    """


class NotACircuit(OMError):
    pass


class DegenerateSimplex(OMError):
    pass


class AnchorOnFace(OMError):
    pass


class CardinalityMismatch(OMError):
    pass


class GenerationFailed(OMError):
    pass


class FormatError(OMError, ValueError):
    """Malformed text input."""
