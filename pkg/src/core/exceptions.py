"""Exception hierarchy shared by the library, the CLI and the HTTP layer."""


class FlopVerifyError(Exception):
    """Base class for every error raised on purpose by this package"""


class InternalCheckError(FlopVerifyError):
    """An internal consistency check failed; the input was fine, the computation was not."""


class UnsupportedRootSystemError(FlopVerifyError, ValueError):
    pass


class NonDominantWeightError(FlopVerifyError, ValueError):
    pass


class UnsupportedPlethysmError(FlopVerifyError, ValueError):
    pass


class InconsistentSequenceError(InternalCheckError, ArithmeticError):
    """A dimension chase produced a negative dimension; points at an upstream bug."""


class InvalidParameterBoxError(FlopVerifyError, ValueError):
    pass


class BoundaryCaseError(FlopVerifyError, ValueError):
    """Requested ranges leave out a boundary case the claim is stated for."""


class UnknownClaimError(FlopVerifyError, ValueError):
    pass


class UnsupportedFormatError(FlopVerifyError, ValueError):
    pass


class IncomparableTablesError(InternalCheckError, ValueError):
    """Two graded tables that should line up do not (different space or cutoff)."""
