"""Exception and warning types raised across the toolkit."""


class CdgError(Exception):
    """Base class for every error raised by cdgraph."""


class GraphInputError(CdgError, ValueError):
    """Graph text could not be turned into a valid LabeledGraph."""


class MalformedInput(GraphInputError):
    pass


class NonPrimeLabel(GraphInputError):
    pass


class SelfLoop(GraphInputError):
    pass


class UnknownEndpoint(GraphInputError):
    pass


class UnknownVertex(CdgError, KeyError):
    pass


class TooLarge(CdgError, ValueError):
    pass


class NotDiameterThree(CdgError, ValueError):
    pass


class BadBaseVertex(CdgError, ValueError):
    pass


class StructureViolation(CdgError, ValueError):
    """A distance partition broke one of the diameter-3 structural rules."""

    def __init__(self, clause: str, witness=None):
        super().__init__(f"{clause}: {witness!r}")
        self.clause = clause
        self.witness = witness


class InconsistentWitness(CdgError):
    pass


class LabelCollision(CdgError, ValueError):
    pass


class EvenP(CdgError, ValueError):
    pass


class PoolExhausted(CdgError):
    pass


class BadN(CdgError, ValueError):
    pass


class InternalCheckFailed(CdgError, AssertionError):
    pass


class UnknownFilter(CdgError, ValueError):
    pass


class DuplicateEdgeWarning(UserWarning):
    """An input edge was listed more than once and collapsed."""
