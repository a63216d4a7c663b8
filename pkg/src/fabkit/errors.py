"""Exception hierarchy shared by all fabkit modules."""


class FabError(ValueError):
    """Base class for domain errors raised by fabkit."""


class DimensionError(FabError):
    pass


class SingularMatrixError(FabError):
    pass


class InvalidFrameError(FabError):
    pass


class NotFloatingError(FabError):
    """Raised when the coprimality condition gcd(k, l) = 1 fails."""


class UnstableRangeError(FabError):
    """Raised for homotopy degrees outside 1 <= r <= 2*min(k, l)."""


class NotSUClassError(FabError):
    pass


class CompatibilityError(FabError):
    pass


class ZeroVectorError(FabError):
    pass


class ClassVectorError(FabError):
    """Malformed characteristic-class vector (wrong kind, truncation or FAB normalization)."""
