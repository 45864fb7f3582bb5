"""Exception types raised by semigap."""


class SemigapError(ValueError):
    """Base class for invalid input to any semigap computation."""


class GeneratorTooSmall(SemigapError):
    pass


class NotCoprime(SemigapError):
    pass


class DomainError(SemigapError):
    """An argument lies outside the domain where the quantity is defined."""
