"""Exceptions shared across the package."""


class SubdrepError(Exception):
    """Base class for all package errors."""


class SingularMatrixError(SubdrepError):
    """Matrix has zero determinant where an invertible one is required."""


class DimensionMismatchError(SubdrepError):
    """Operands live in different dimensions."""


class AffineWeightsError(SubdrepError):
    """Affine combination weights do not sum to one."""


class NotARepresentativeError(SubdrepError):
    """Two supplied coset representatives are congruent to each other."""


class NotNormalizedError(SubdrepError):
    """Mask coefficients do not sum to |det(M)|."""


class WindowTooSmallError(SubdrepError):
    """Sampling window too small for the requested number of steps."""


class InfeasibleError(SubdrepError):
    """Linear condition system has no solution."""


class UnknownNameError(SubdrepError, KeyError):
    """No builtin scheme registered under the requested name."""


class SelfCheckError(SubdrepError):
    """Redundant evaluation paths disagreed; indicates an internal bug."""
