"""Exception hierarchy shared by every module.

The CLI reports ``type(err).__name__`` on stderr, so class names are part of
the command-line contract.
"""


class BrickError(Exception):
    """Base class for domain errors."""


class InvalidBand(BrickError, ValueError):
    pass


class TooFewLevels(BrickError, ValueError):
    pass


class KernelTooDeep(BrickError, ValueError):
    pass


class DisconnectedGraph(BrickError, ValueError):
    pass


class NotSorting(BrickError):
    pass


class NotAContact(BrickError, ValueError):
    pass


class GraphMismatch(BrickError):
    pass


class ResourceLimit(BrickError):
    pass


class CyclicGraph(BrickError, ValueError):
    pass


class NotIrreducible(BrickError):
    pass


class DimensionTooLarge(BrickError):
    pass


class OracleMismatch(BrickError):
    """Raised by the hull oracle; ``witness`` holds the offending object."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotATriangulation(BrickError, ValueError):
    pass


class NotRelevant(BrickError, ValueError):
    pass


class NotAntisymmetric(BrickError, ValueError):
    pass
