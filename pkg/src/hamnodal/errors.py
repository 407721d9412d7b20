"""Exception hierarchy shared by all modules."""


class HamnodalError(Exception):
    """Base class for every error raised by this package."""


class ParamError(HamnodalError, ValueError):
    """Invalid (n, q) or a graph beyond the desk-scale guard."""


class CoordOutOfRange(HamnodalError, ValueError):
    pass


class LengthMismatch(HamnodalError, ValueError):
    pass


class BadCoordinate(HamnodalError, ValueError):
    pass


class BadLevel(HamnodalError, ValueError):
    pass


class IndexOutOfRange(HamnodalError, ValueError):
    pass


class AlphabetMismatch(HamnodalError, ValueError):
    pass


class AlphabetTooSmall(HamnodalError, ValueError):
    pass


class NotAPartition(HamnodalError, ValueError):
    pass


class NotEquitable(HamnodalError, ValueError):
    """Raised with ``witness``: the first vertex whose neighbour counts deviate."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ZeroFunction(HamnodalError, ValueError):
    pass


class NotAnEigenfunction(HamnodalError, ValueError):
    pass


class Unsupported(HamnodalError):
    """No proven construction exists for the requested (n, q, i)."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class ZeroVector(HamnodalError, ValueError):
    pass


class ZeroDimension(HamnodalError, ValueError):
    pass


class BudgetExceeded(HamnodalError):
    pass
