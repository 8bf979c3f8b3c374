"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid input: bad dimensions, non-orthonormal bases, malformed files."""


class DimensionMismatch(ValidationError):
    """Operands with incompatible shapes."""


class ConfigError(ValidationError):
    """Invalid configuration file or command-line arguments."""


class NumericalError(RuntimeError):
    """A computation failed numerically (singularity, non-convergence)."""


class OutOfNeighborhood(NumericalError):
    """Target subspace is numerically at or beyond the cut locus of the base."""
