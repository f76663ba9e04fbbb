"""Covariance and symplectic matrices of n-mode Gaussian states."""

from typing import Annotated, Any

import numpy as np
from pydantic import BaseModel, Field, model_validator

from hawking_steering.exceptions import ContractViolationError
from hawking_steering.tolerances import CONSTRUCTION_TOL, SYMPLECTIC_TOL

from .validators import PhaseSpaceMatrix, asymmetry


class CovarianceMatrix(BaseModel):
    """Second moments of a zero-mean n-mode Gaussian state.

    Quadratures are ordered (x_1, p_1, ..., x_n, p_n) and the vacuum is the identity.
    The array is stored read-only; every operation returns a new value.
    """

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    entries: Annotated[
        np.ndarray,
        PhaseSpaceMatrix(symmetric=True),
        Field(description="2n x 2n real symmetric matrix, vacuum = identity"),
    ]

    @property
    def n_modes(self) -> int:
        """Number of bosonic modes."""
        return self.entries.shape[0] // 2

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def block(self, i: int, j: int) -> np.ndarray:
        """2x2 block coupling modes i and j."""
        return self.entries[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]

    def det(self) -> float:
        return float(np.linalg.det(self.entries))

    def __array__(self, dtype: Any = None, copy: Any = None) -> np.ndarray:
        return np.asarray(self.entries, dtype=dtype)

    @classmethod
    def from_array(cls, data: Any) -> "CovarianceMatrix":
        """Build from any array-like, raising a contract error instead of a validation error.

        Raises
        ------
        ContractViolationError
            If the data is not square or is asymmetric beyond the construction tolerance.
        """
        if isinstance(data, CovarianceMatrix):
            return data
        matrix = np.asarray(data, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ContractViolationError(f"Covariance matrix must be square, got shape {matrix.shape}")
        if matrix.shape[0] == 0 or matrix.shape[0] % 2:
            raise ContractViolationError(f"Covariance matrix dimension must be 2n, got {matrix.shape[0]}")
        drift = asymmetry(matrix)
        if drift > CONSTRUCTION_TOL:
            raise ContractViolationError(f"Covariance matrix is not symmetric (relative asymmetry {drift:.3e})")
        return cls(entries=matrix)


class SymplecticMatrix(BaseModel):
    """Real 2n x 2n matrix S with S Omega S^T = Omega."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    entries: Annotated[
        np.ndarray,
        PhaseSpaceMatrix(symmetric=False),
        Field(description="2n x 2n real symplectic matrix"),
    ]

    @property
    def n_modes(self) -> int:
        return self.entries.shape[0] // 2

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype: Any = None, copy: Any = None) -> np.ndarray:
        return np.asarray(self.entries, dtype=dtype)

    @model_validator(mode="after")
    def check_symplectic(self) -> "SymplecticMatrix":
        """Check S Omega S^T = Omega, entrywise, scaled by max|S_ij|^2 for large squeezing."""
        from hawking_steering.symplectic import symplectic_form

        omega = symplectic_form(self.n_modes)
        residual = np.max(np.abs(self.entries @ omega @ self.entries.T - omega))
        scale = max(1.0, float(np.max(np.abs(self.entries))) ** 2)
        if residual > SYMPLECTIC_TOL * scale:
            raise ValueError(f"Matrix is not symplectic (residual {residual:.3e})")
        return self
