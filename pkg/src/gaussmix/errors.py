"""Exception hierarchy shared by all gaussmix modules."""


class GaussMixError(Exception):
    """Base class for all gaussmix errors."""


class InvalidParameterError(GaussMixError, ValueError):
    """A caller supplied an argument outside its documented range."""


class NonPhysicalStateError(GaussMixError, ValueError):
    """A mean/covariance pair violates the uncertainty relation."""


class DomainError(GaussMixError, ValueError):
    """The requested quantity is undefined at this parameter point,
    e.g. threshold machinery at coupling 0 or 1 (no interaction)."""


class NumericError(GaussMixError, ArithmeticError):
    """An internal consistency check failed; signals corrupted input
    rather than a physics verdict."""
