"""Exception hierarchy shared by every oddtrails module.

The three branches map onto the CLI exit codes: ``InvalidInput`` (66),
``BudgetExceeded`` (65) and ``InternalInvariantError`` (2).
"""


class OddTrailsError(Exception):
    """Base class for all errors raised by the package."""


class InvalidInput(OddTrailsError):
    """The caller handed over something that violates a precondition."""


class GraphFormatError(InvalidInput):
    pass


class LoopWouldForm(InvalidInput):
    pass


class SameVertex(InvalidInput):
    pass


class BadParameter(InvalidInput):
    pass


class BadPosition(InvalidInput):
    pass


class EndpointMismatch(InvalidInput):
    pass


class EdgeOverlap(InvalidInput):
    pass


class InvalidCollection(InvalidInput):
    """A trail collection broke one of its invariants (parity, ends, disjointness)."""


class InvalidTriple(InvalidInput):
    pass


class OverlappingTerminalSets(InvalidInput):
    pass


class NotAPath(InvalidInput):
    pass


class EndpointsNotInA(InvalidInput):
    pass


class EmptyTrail(InvalidInput):
    pass


class InsufficientConnectivity(InvalidInput):
    pass


class ConnectivityTooLow(InvalidInput):
    def __init__(self, connectivity: int, required: int):
        super().__init__(
            f"edge connectivity {connectivity} is below the required {required}"
        )
        self.connectivity = connectivity
        self.required = required


class BudgetExceeded(OddTrailsError):
    def __init__(self, what: str, cap: int, size: int):
        super().__init__(f"{what}: instance size {size} exceeds budget cap {cap}")
        self.what = what
        self.cap = cap
        self.size = size


class InternalInvariantError(OddTrailsError):
    """Raised when a proven property fails; always an implementation bug."""


class ClassificationFailure(InternalInvariantError):
    pass


class WitnessInvalid(InternalInvariantError):
    pass


class IterationBoundExceeded(InternalInvariantError):
    pass


class PotentialNotDecreasing(InternalInvariantError):
    pass


class CertificateRejected(InternalInvariantError):
    pass
