"""Exception types shared across the package."""


class LcRigidityError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateEdge(LcRigidityError):
    pass


class SelfLoopAsEdge(LcRigidityError):
    pass


class UnknownVertex(LcRigidityError):
    pass


class UnknownElement(LcRigidityError):
    pass


class NotIndependent(LcRigidityError):
    pass


class NotDependent(LcRigidityError):
    pass


class EmptyGroundSet(LcRigidityError):
    pass


class NotConnectedMatroid(LcRigidityError):
    pass


class NoLoop(LcRigidityError):
    pass


class NotMlcConnected(LcRigidityError):
    pass


class NoUnbalancedSeparation(LcRigidityError):
    pass


class PreconditionFailed(LcRigidityError):
    pass


class MissingEdge(LcRigidityError):
    pass


class InvalidMove(LcRigidityError):
    pass


class NotANode(LcRigidityError):
    pass


class IllegalChoice(LcRigidityError):
    pass


class ExhaustionBug(LcRigidityError):
    """An exhaustive scan that is guaranteed to succeed found nothing.

    Raising this signals an implementation fault, not a valid negative
    answer.
    """


class UnboundElement(LcRigidityError):
    pass


class NonzeroRequired(LcRigidityError):
    pass


class DegenerateLine(LcRigidityError):
    pass


class ParseError(LcRigidityError):
    pass
