"""Exception types raised across the package."""


class MonogenicaError(ValueError):
    pass


class SpaceMismatch(MonogenicaError):
    """Operands live in different variable spaces (x versus y)."""


class UnknownVariable(MonogenicaError):
    pass


class IndexOutOfRange(MonogenicaError):
    pass


class DecompositionMismatch(MonogenicaError):
    """A basis element failed its harmonic decomposition; indicates a bug."""


class RealizationMismatch(MonogenicaError):
    pass


class HeterogeneousFamily(MonogenicaError):
    pass


class OrderOutOfRange(MonogenicaError):
    pass
