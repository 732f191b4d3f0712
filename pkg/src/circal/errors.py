"""Exception hierarchy for circal.

Every operation failure raises a subclass of CircalError so callers (and the
CLI) can map failure classes to stable exit codes.
"""


class CircalError(Exception):
    """Base class for all circal errors."""


class InvalidEmbedding(CircalError):
    """Rotation system / boundary order does not describe a disk embedding."""


class NotConnected(CircalError):
    pass


class Disconnected(NotConnected):
    pass


class SingularInterior(CircalError):
    """Interior Laplacian block is not invertible."""


class SingularMatrix(CircalError):
    pass


class BadResponse(CircalError):
    """Matrix fails the response-matrix contract."""


class BadResistance(CircalError):
    """Matrix fails the effective-resistance contract."""


class BadCardinality(CircalError):
    """Index subset has the wrong size."""


class RankDeficient(CircalError):
    pass


class ZeroColumn(CircalError):
    pass


class ScanExhausted(CircalError):
    """Cyclic column scan ran a full cycle without finding a basis."""


class NonInteger(CircalError):
    """A formula that must produce an integer did not."""


class NotMinimal(CircalError):
    pass


class BoundaryVertex(CircalError):
    """Operation requires an inner vertex."""


class ZeroMinor(CircalError):
    """A required twisted minor vanished."""


class Underdetermined(CircalError):
    """Constraint propagation stalled before fixing every edge."""


class Inconsistent(CircalError):
    """A redundant constraint failed on the recovered weights."""


class VerificationFailed(CircalError):
    """Forward re-solve of the recovered network does not match the input."""


class TooLarge(CircalError):
    """Input exceeds the brute-force oracle size limit."""


class IndexOutOfRange(CircalError):
    pass


class NotOdd(CircalError):
    pass


class NotStandard(CircalError):
    pass


class FormatError(CircalError):
    """Malformed input file."""
