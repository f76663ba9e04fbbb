"""Covariance-matrix calculus for n-mode Gaussian states.

Conventions: quadratures ordered (x_1, p_1, ..., x_n, p_n), hbar = 1 with the vacuum
covariance equal to the identity. Every function is pure and returns new values.
"""

from typing import Iterable, Sequence

import numpy as np
from loguru import logger
from scipy.linalg import block_diag, lu_factor, lu_solve

from hawking_steering.exceptions import (
    ContractViolationError,
    DomainError,
    InvalidDimensionError,
    SingularBlockError,
)
from hawking_steering.models import BonaFideReport, CovarianceMatrix, ModePartition, SymplecticMatrix
from hawking_steering.tolerances import PAIRING_TOL, PHYSICALITY_TOL, SPECTRAL_TOL

_OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])

# Condition numbers above this make the steering block numerically singular.
MAX_BLOCK_CONDITION = 1e12

CovarianceLike = CovarianceMatrix | np.ndarray | Sequence[Sequence[float]]


def symplectic_form(n_modes: int) -> np.ndarray:
    """Omega = direct sum of n copies of [[0, 1], [-1, 0]].

    Raises
    ------
    InvalidDimensionError
        If ``n_modes`` is not a positive integer.
    """
    if isinstance(n_modes, bool) or not isinstance(n_modes, (int, np.integer)) or n_modes < 1:
        raise InvalidDimensionError(f"n_modes must be a positive integer, got {n_modes!r}")
    return np.kron(np.eye(int(n_modes)), _OMEGA_1)


def _as_cm(sigma: CovarianceLike) -> CovarianceMatrix:
    return CovarianceMatrix.from_array(sigma)


def _as_symplectic(S: SymplecticMatrix | np.ndarray) -> SymplecticMatrix:
    if isinstance(S, SymplecticMatrix):
        return S
    return SymplecticMatrix(entries=S)


def mode_indices(modes: Iterable[int]) -> list[int]:
    """Row/column indices of the (x, p) pairs of the given modes."""
    return [q for k in modes for q in (2 * k, 2 * k + 1)]


def check_bona_fide(sigma: CovarianceLike) -> BonaFideReport:
    """Uncertainty-principle test: sigma + i Omega >= 0.

    Raises
    ------
    ContractViolationError
        If sigma is not symmetric.
    """
    cm = _as_cm(sigma)
    omega = symplectic_form(cm.n_modes)
    min_eig = float(np.min(np.linalg.eigvalsh(cm.entries + 1j * omega)))
    return BonaFideReport(physical=min_eig >= -PHYSICALITY_TOL, min_eigenvalue=min_eig)


def symplectic_eigenvalues(sigma: CovarianceLike) -> np.ndarray:
    """Symplectic eigenvalues of a positive-definite sigma, sorted ascending.

    The eigenvalues of Omega sigma come in pairs +/- i nu; each |nu| is returned once.

    Raises
    ------
    DomainError
        If sigma is not positive definite, or the spectrum does not pair up.
    """
    cm = _as_cm(sigma)
    smallest = float(np.min(np.linalg.eigvalsh(cm.entries)))
    if smallest <= 0:
        raise DomainError(f"Covariance matrix is not positive definite (eigenvalue {smallest:.6e})", smallest)

    spectrum = np.linalg.eigvals(symplectic_form(cm.n_modes) @ cm.entries)
    magnitudes = np.sort(np.abs(spectrum))
    lower, upper = magnitudes[0::2], magnitudes[1::2]
    mismatch = np.abs(upper - lower) / np.maximum(1.0, upper)
    if np.any(mismatch > PAIRING_TOL):
        raise DomainError(f"Eigenvalues of Omega*sigma do not pair: {magnitudes}", float(mismatch.max()))
    return (lower + upper) / 2


def partial_trace(sigma: CovarianceLike, keep: Sequence[int]) -> CovarianceMatrix:
    """Reduced covariance matrix on the modes in ``keep`` (ordering preserved).

    Raises
    ------
    ContractViolationError
        If ``keep`` is empty, out of range, or not strictly increasing.
    """
    cm = _as_cm(sigma)
    keep = [int(k) for k in keep]
    if not keep:
        raise ContractViolationError("partial_trace needs at least one mode to keep")
    if any(k < 0 or k >= cm.n_modes for k in keep):
        raise ContractViolationError(f"Mode indices {keep} out of range for {cm.n_modes} modes")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise ContractViolationError(f"Mode indices must be strictly increasing without duplicates, got {keep}")

    idx = mode_indices(keep)
    return CovarianceMatrix(entries=cm.entries[np.ix_(idx, idx)])


def _invert_steering_block(block: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """A^{-1} rhs, closed form for a single-mode block, LU otherwise."""
    condition = float(np.linalg.cond(block))
    if not np.isfinite(condition) or condition > MAX_BLOCK_CONDITION:
        raise SingularBlockError(f"Steering block is singular (condition estimate {condition:.3e})", condition)

    if block.shape == (2, 2):
        a, b, c, d = block[0, 0], block[0, 1], block[1, 0], block[1, 1]
        inverse = np.array([[d, -b], [-c, a]]) / (a * d - b * c)
        return inverse @ rhs
    return lu_solve(lu_factor(block), rhs)


def schur_complement(sigma: CovarianceLike, partition: ModePartition) -> CovarianceMatrix:
    """M = B - C^T A^{-1} C, with A the steering-party block and B the steered-party block.

    Modes outside the partition are traced out first.

    Raises
    ------
    SingularBlockError
        If A is (numerically) singular; the error carries the condition estimate.
    """
    cm = _as_cm(sigma)
    partition.check_against(cm.n_modes)
    a_idx = mode_indices(partition.steering_modes)
    b_idx = mode_indices(partition.steered_modes)

    A = cm.entries[np.ix_(a_idx, a_idx)]
    B = cm.entries[np.ix_(b_idx, b_idx)]
    C = cm.entries[np.ix_(a_idx, b_idx)]

    M = B - C.T @ _invert_steering_block(A, C)
    return CovarianceMatrix(entries=(M + M.T) / 2)


def renyi2_entropy(sigma: CovarianceLike) -> float:
    """Renyi-2 entropy 1/2 ln det sigma, in nats.

    Raises
    ------
    DomainError
        If det sigma < 1 beyond the physicality tolerance.
    """
    cm = _as_cm(sigma)
    sign, logdet = np.linalg.slogdet(cm.entries)
    if sign <= 0 or logdet < np.log1p(-PHYSICALITY_TOL):
        det = float(sign * np.exp(logdet))
        raise DomainError(f"det sigma = {det:.12g} < 1: not a physical state", det)
    return 0.5 * float(logdet)


def apply_symplectic(sigma: CovarianceLike, S: SymplecticMatrix | np.ndarray) -> CovarianceMatrix:
    """Congruence S sigma S^T.

    Raises
    ------
    ContractViolationError
        If the dimensions of sigma and S differ.
    """
    cm = _as_cm(sigma)
    S = _as_symplectic(S)
    if S.dim != cm.dim:
        raise ContractViolationError(f"Dimension mismatch: sigma is {cm.dim}x{cm.dim}, S is {S.dim}x{S.dim}")
    out = S.entries @ cm.entries @ S.entries.T
    return CovarianceMatrix(entries=(out + out.T) / 2)


def direct_sum(*sigmas: CovarianceLike) -> CovarianceMatrix:
    """Block-diagonal composition; mode counts add."""
    if not sigmas:
        raise ContractViolationError("direct_sum needs at least one matrix")
    return CovarianceMatrix(entries=block_diag(*(_as_cm(s).entries for s in sigmas)))


def symplectic_direct_sum(*matrices: SymplecticMatrix | np.ndarray) -> SymplecticMatrix:
    """Block-diagonal composition of symplectic matrices acting on disjoint modes."""
    if not matrices:
        raise ContractViolationError("symplectic_direct_sum needs at least one matrix")
    return SymplecticMatrix(entries=block_diag(*(_as_symplectic(S).entries for S in matrices)))


def identity_symplectic(n_modes: int) -> SymplecticMatrix:
    """Identity map on n modes."""
    symplectic_form(n_modes)
    return SymplecticMatrix(entries=np.eye(2 * n_modes))


def is_pure(sigma: CovarianceLike, tol: float = SPECTRAL_TOL) -> bool:
    """All symplectic eigenvalues equal to 1 within ``tol``."""
    nu = symplectic_eigenvalues(sigma)
    pure = bool(np.all(np.abs(nu - 1.0) <= tol))
    if not pure:
        logger.debug(f"State is mixed: symplectic eigenvalues {nu}")
    return pure
