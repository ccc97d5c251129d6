"""Exception types shared across the package."""


class YbeError(Exception):
    """Base class for all structured errors raised by this package."""


class ParseError(YbeError):
    """Malformed solution file, cross-map file, or coefficient file."""


class DegenerateError(YbeError):
    """A left or right action fails to be a bijection."""


class NotASolutionError(YbeError):
    """An operation needs a braided (or involutive) map and got something else."""


class CyclicConditionError(YbeError):
    """A cyclic-condition grid equality fails where the contract requires it."""


class NotCertifiedError(YbeError):
    """Normal forms were requested from a presentation that is not a certified
    Groebner basis."""


class BoundExceededError(YbeError):
    """A configurable size or enumeration bound was exceeded."""
