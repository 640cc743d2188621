class SemigroupError(Exception):
    """Base class for all errors raised by fibsym."""


class NonMinimalGenerators(SemigroupError):
    """A generator is a nonnegative combination of the other generators."""


class NotSymmetric(SemigroupError):
    """The symmetry conditions for a generator pair do not hold."""


class TruncationExceeded(SemigroupError):
    """A power-series coefficient was requested beyond the truncation limit."""


class BoundTooSmall(SemigroupError):
    """The sieve bound does not reach past the conductor."""


class OracleInfeasible(SemigroupError):
    """The conductor exceeds the configured enumeration ceiling."""
