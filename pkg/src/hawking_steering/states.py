"""Builders for the Gaussian states used in the analysis."""

import numpy as np

from hawking_steering.models import CovarianceMatrix, SqueezingParam
from hawking_steering.symplectic import symplectic_form

Z2 = np.diag([1.0, -1.0])
I2 = np.eye(2)


def as_squeezing(s: float | SqueezingParam) -> SqueezingParam:
    if isinstance(s, SqueezingParam):
        return s
    return SqueezingParam(s=s)


def vacuum(n_modes: int) -> CovarianceMatrix:
    """Vacuum on n modes: the 2n x 2n identity."""
    symplectic_form(n_modes)
    return CovarianceMatrix(entries=np.eye(2 * n_modes))


def two_mode_squeezed(s: float | SqueezingParam) -> CovarianceMatrix:
    """Two-mode squeezed vacuum with squeezing s.

    Diagonal blocks cosh(2s) I, cross block sinh(2s) Z. The cross block uses sinh, not the
    cosh that appears in some printed versions of this matrix: only sinh gives det = 1.
    """
    s = as_squeezing(s).s
    c2, s2 = np.cosh(2 * s), np.sinh(2 * s)
    return CovarianceMatrix(entries=np.block([[c2 * I2, s2 * Z2], [s2 * Z2, c2 * I2]]))
