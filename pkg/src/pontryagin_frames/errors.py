"""Exception hierarchy.

Errors flagged ``negative = True`` describe a well-formed question whose
mathematical answer is "no" (not a frame, infeasible norms, degenerate
subspace). The command line maps those to exit code 2 and everything else
to exit code 1.
"""


class FrameError(Exception):
    """Base class for all library errors."""

    negative = False


class NonFiniteError(FrameError, ValueError):
    """An array contains NaN or Inf."""


class DimensionMismatchError(FrameError, ValueError):
    """Operand shapes do not agree with the spaces involved."""


class InvalidDimensionError(FrameError, ValueError):
    """A space dimension or signature is not acceptable."""


class NotHermitianError(FrameError, ValueError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotPositiveDefiniteError(FrameError, ValueError):
    """Hermitian matrix has a non-positive eigenvalue."""


class NotJOrthonormalError(FrameError, ValueError):
    """Vectors fail the check [e_i, e_j] = +-delta_ij."""


class ConvergenceError(FrameError, ArithmeticError):
    """An iterative kernel exhausted its sweep budget."""


class DegenerateSubspaceError(FrameError):
    """The indefinite Gram matrix of a subspace is singular.

    Such a subspace contains a neutral direction that is orthogonal to the
    whole subspace, so no J-orthogonal projection onto it exists.
    """

    negative = True


class NotMajorizedError(FrameError):
    """Squared norms are not majorized by the spectrum."""

    negative = True

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotFrameError(FrameError):
    """An operation requiring a frame received a non-spanning family."""

    negative = True

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class SingularFrameOperatorError(FrameError):
    """Frame operator too ill-conditioned to invert reliably."""

    negative = True


class KMismatchError(FrameError):
    """Two families have a different number of vectors."""

    negative = True


__all__ = [
    "FrameError",
    "NonFiniteError",
    "DimensionMismatchError",
    "InvalidDimensionError",
    "NotHermitianError",
    "NotPositiveDefiniteError",
    "NotJOrthonormalError",
    "ConvergenceError",
    "DegenerateSubspaceError",
    "NotMajorizedError",
    "NotFrameError",
    "SingularFrameOperatorError",
    "KMismatchError",
]
