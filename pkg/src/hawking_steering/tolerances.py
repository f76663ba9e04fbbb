"""Numeric tolerances shared across the package."""

import sys

# Symmetry of constructed matrices, relative to the largest entry.
CONSTRUCTION_TOL = 1e-12
# Minimum eigenvalue allowed for sigma + i*Omega.
PHYSICALITY_TOL = 1e-10
# det / spectral identities.
SPECTRAL_TOL = 1e-9
# Pairing of +/- eigenvalues of Omega*sigma.
PAIRING_TOL = 1e-8
# Symplectic condition S Omega S^T = Omega, entrywise.
SYMPLECTIC_TOL = 1e-10
# Steering below this many nats counts as zero.
STEERABLE_TOL = 1e-12
# Squeezing overflow guard: cosh(2s) overflows doubles far above this.
MAX_SQUEEZING = 25.0
# Absolute rounding per unit of the largest entry of a small dense matrix.
ROUNDING_PER_UNIT = 5e-15


def conditioned_tolerance(scale: float, floor: float = 1e-10) -> float:
    """Tolerance for symplectic eigenvalues of a matrix whose largest entry is ``scale``.

    Rounding in entries of size x moves symplectic eigenvalues near 1 by about
    1e-15 x^2, since Omega*sigma is far from normal for strongly squeezed states.
    """
    return max(floor, 1e-15 * scale**2)


def rounding_tolerance(scale: float, floor: float = PHYSICALITY_TOL) -> float:
    """Eigenvalues of a Hermitian matrix with largest entry ``scale`` move by about eps * scale."""
    return max(floor, ROUNDING_PER_UNIT * scale)


def steering_tolerance(scale: float, nu: float, floor: float = 1e-10) -> float:
    """Absolute error of -ln(nu) for a symplectic eigenvalue nu of a Schur complement.

    The subtraction B - C^T A^{-1} C leaves an error of about eps * scale in the entries,
    which is relative error eps * scale / nu in nu.
    """
    return max(floor, ROUNDING_PER_UNIT * scale / nu)


def log_rounding(magnitude: float) -> float:
    """Rounding left in a difference of logarithms whose terms are about ``magnitude``."""
    return 8 * sys.float_info.epsilon * max(1.0, magnitude)
