"""Exception hierarchy for graph validation and transform preconditions."""


class GraphError(ValueError):
    """Base class for all structured errors raised by this package."""


# -- graph construction / validation ----------------------------------------

class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class NotConnectedError(GraphError):
    pass


class EdgeCountMismatchError(GraphError):
    """Edge count does not equal vertex count, so the graph cannot be unicyclic."""


class DisconnectedError(GraphError):
    """Raised when an operation needs a connected graph (infinite transmission)."""


class GirthTooSmallError(GraphError):
    pass


class TooFewVerticesError(GraphError):
    pass


class TooLargeError(GraphError):
    """Input exceeds a configured desk-scale bound."""


# -- class keys and families -------------------------------------------------

class InvalidClassKeyError(GraphError):
    pass


class ClassKeyOutOfTheoremRangeError(GraphError):
    """The (n, r) class lies outside the characterized range r <= (n+3)/2."""


class EmptyClassError(GraphError):
    """No unicyclic graph realizes the requested (n, r) pair."""


# -- transforms ---------------------------------------------------------------

class InvalidPartitionError(GraphError):
    pass


class TrivialPartError(GraphError):
    pass


class NotABridgeError(GraphError):
    pass


class TrivialBridgeError(GraphError):
    pass


class PreconditionViolatedError(GraphError):
    """A transform precondition failed; `which` names the violated condition."""

    def __init__(self, which: str, message: str = ""):
        self.which = which
        super().__init__(message or which)


class ExcludedConfigurationError(GraphError):
    pass


class BranchesAlreadyBalancedError(GraphError):
    pass


class NotASubdividedStarError(GraphError):
    pass


class WrongShapeError(GraphError):
    pass


class NoLeafNeighborError(GraphError):
    pass
