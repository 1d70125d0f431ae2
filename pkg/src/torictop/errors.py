"""Exception taxonomy shared by all modules.

Each class maps to one CLI exit code (see cli.EXIT_CODES); the service maps
the same classes to HTTP error payloads.
"""


class TorictopError(Exception):
    """Base class for all domain errors raised by this package."""


class FanFormatError(TorictopError):
    """Malformed fan/Gram input: bad JSON, non-primitive ray, bad index, duplicates."""


class NotSmoothError(TorictopError):
    """A maximal cone's rays do not form a basis of the integer lattice."""


class NotCompleteError(TorictopError):
    """Wall pairing or coverage failed: the fan does not cover all of space."""


class NotAmpleError(TorictopError):
    """The supplied divisor class is not positive on every invariant curve."""


class HypothesisError(TorictopError):
    """A standing hypothesis is violated: dimension parity/size, sublattice conditions."""


class InternalConsistencyError(TorictopError):
    """An exactness assertion failed (non-integer reduction, rank mismatch, ...)."""


class SearchExhaustedError(TorictopError):
    """Isotropic-vector enumeration hit its radius bound where a vector must exist."""
