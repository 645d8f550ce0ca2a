"""Typed errors shared across the package."""


class AlgebraError(ValueError):
    """Base class for algebraic misuse (bad operands, bad structure)."""


class BackendMismatch(AlgebraError):
    """Two operands live in different operator algebras."""


class DimensionMismatch(AlgebraError):
    """Matrix or tensor-slot dimensions do not line up."""


class SingularOperator(AlgebraError):
    """An inverse was requested where none exists."""


class UnsupportedOrder(AlgebraError):
    """A closed form was requested beyond the orders it covers."""


class InsufficientSamples(AlgebraError):
    """A sampled polynomial check was given fewer points than its degree needs."""
