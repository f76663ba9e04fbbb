"""Array validation for phase-space matrices."""

from typing import Any

import numpy as np
from pydantic_core import core_schema

from hawking_steering.tolerances import CONSTRUCTION_TOL


def asymmetry(matrix: np.ndarray) -> float:
    """Largest entry of |M - M^T| relative to the largest |M_ij| (or 1 for the zero matrix)."""
    scale = float(np.max(np.abs(matrix))) if matrix.size else 0.0
    if scale == 0.0:
        scale = 1.0
    return float(np.max(np.abs(matrix - matrix.T))) / scale


class PhaseSpaceMatrix:
    """Validator for real 2n x 2n matrices stored as read-only numpy arrays."""

    def __init__(self, symmetric: bool = False, tol: float = CONSTRUCTION_TOL):
        """Create a validator for phase-space matrices.

        Parameters
        ----------
        symmetric : bool
            Require M = M^T within ``tol`` (relative to the largest entry). Inputs inside the
            tolerance are symmetrized as (M + M^T)/2.
        tol : float
            Relative symmetry tolerance.
        """
        self.symmetric = symmetric
        self.tol = tol

    def __get_pydantic_core_schema__(
        self, source_type: Any, handler: Any
    ) -> core_schema.CoreSchema:
        """Generate core schema for Pydantic v2.

        Arrays are validated here instead of through the default schema, and serialized
        to row-major nested lists in JSON mode.
        """
        return core_schema.with_info_plain_validator_function(
            self.validate,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda value: value.tolist(), when_used="json"
            ),
            metadata={"phase_space": True, "symmetric": self.symmetric},
        )

    def validate(
        self, input_value: Any, info: core_schema.ValidationInfo | None
    ) -> np.ndarray:
        """Validate shape and finiteness, returning a frozen float64 copy.

        Raises
        ------
        ValueError
            If the value is not a finite, square, even-dimensional real matrix, or if it
            is required to be symmetric and is not.
        """
        try:
            matrix = np.array(input_value, dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Not a real matrix: {e}")

        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Expected a square matrix, got shape {matrix.shape}")
        if matrix.shape[0] == 0 or matrix.shape[0] % 2:
            raise ValueError(f"Phase-space dimension must be a positive even number, got {matrix.shape[0]}")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("Matrix has non-finite entries")

        if self.symmetric:
            drift = asymmetry(matrix)
            if drift > self.tol:
                raise ValueError(f"Matrix is not symmetric (relative asymmetry {drift:.3e})")
            matrix = (matrix + matrix.T) / 2

        matrix.flags.writeable = False
        return matrix
