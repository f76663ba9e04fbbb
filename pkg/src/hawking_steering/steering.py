"""Gaussian steering measures and steering asymmetry.

Two independent paths are provided: the general one (symplectic eigenvalues of the Schur
complement of the steering party) and closed forms for the Alice|Bob and Bob|anti-Bob
states of the Hawking channel. All values are in nats.
"""

import math
from typing import Literal

import numpy as np
from loguru import logger

from hawking_steering.channel import as_hawking, reduced_ab, reduced_bbbar
from hawking_steering.exceptions import ContractViolationError, DomainError
from hawking_steering.models import CovarianceMatrix, ModePartition, Pair, SteeringReport
from hawking_steering.states import as_squeezing
from hawking_steering.symplectic import (
    CovarianceLike,
    check_bona_fide,
    mode_indices,
    renyi2_entropy,
    schur_complement,
    symplectic_eigenvalues,
    symplectic_form,
)
from hawking_steering.tolerances import log_rounding, rounding_tolerance

Direction = Literal["A->B", "B->A", "B->Bbar", "Bbar->B"]

DIRECTIONS: tuple[Direction, ...] = ("A->B", "B->A", "B->Bbar", "Bbar->B")
LN2 = math.log(2.0)

# First mode of each reduced two-mode state steers the second in the forward direction.
FORWARD = ModePartition.of(0, 1)
BACKWARD = FORWARD.swapped()

PAIR_DIRECTIONS: dict[Pair, tuple[Direction, Direction]] = {
    "AB": ("A->B", "B->A"),
    "BBbar": ("B->Bbar", "Bbar->B"),
}


def _restrict(sigma: CovarianceLike, partition: ModePartition) -> tuple[CovarianceMatrix, ModePartition]:
    """Covariance matrix on the partition's modes (steering party first) and the relabelled partition."""
    cm = CovarianceMatrix.from_array(sigma)
    partition.check_against(cm.n_modes)
    idx = mode_indices(partition.modes)
    n_a = len(partition.steering_modes)
    local = ModePartition(
        steering_modes=tuple(range(n_a)),
        steered_modes=tuple(range(n_a, len(partition.modes))),
    )
    return CovarianceMatrix(entries=cm.entries[np.ix_(idx, idx)]), local


def _require_physical(cm: CovarianceMatrix) -> None:
    """Uncertainty-principle gate, widened by the rounding that large entries bring to eigvalsh."""
    report = check_bona_fide(cm)
    if report.min_eigenvalue < -rounding_tolerance(float(np.max(np.abs(cm.entries)))):
        raise DomainError(
            f"Covariance matrix violates the uncertainty principle (min eigenvalue {report.min_eigenvalue:.3e})",
            report.min_eigenvalue,
        )


def nonsteerability_min_eigenvalue(sigma: CovarianceLike, partition: ModePartition) -> float:
    """Smallest eigenvalue of sigma + i (0_A + Omega_B); negative iff steerable from A to B."""
    cm, local = _restrict(sigma, partition)
    n_a, n_b = len(local.steering_modes), len(local.steered_modes)
    mask = np.zeros((cm.dim, cm.dim))
    mask[2 * n_a :, 2 * n_a :] = symplectic_form(n_b)
    return float(np.min(np.linalg.eigvalsh(cm.entries + 1j * mask)))


def gaussian_steering_signed(sigma: CovarianceLike, partition: ModePartition) -> float:
    """Steering before the max{0, .} clamp.

    With a single steered mode this is -ln(nu) of the Schur complement, which is negative
    when the state is not steerable. With several steered modes it is -sum ln(nu_j) over
    nu_j < 1, or -ln(min nu_j) when no eigenvalue is below 1.
    """
    cm, local = _restrict(sigma, partition)
    _require_physical(cm)
    nu = symplectic_eigenvalues(schur_complement(cm, local))
    below = nu[nu < 1.0]
    if len(nu) == 1 or below.size == 0:
        return float(-np.log(nu.min()))
    return float(-np.sum(np.log(below)))


def gaussian_steering(sigma: CovarianceLike, partition: ModePartition) -> float:
    """G = max{0, -sum_{nu_j < 1} ln nu_j} over the symplectic eigenvalues of the Schur complement.

    Raises
    ------
    DomainError
        If sigma is not a physical covariance matrix.
    SingularBlockError
        If the steering block cannot be inverted.
    """
    return max(0.0, gaussian_steering_signed(sigma, partition))


def _one_mode_signed(sigma: CovarianceLike, partition: ModePartition) -> float:
    if len(partition.steered_modes) != 1:
        raise ContractViolationError(
            f"Steered party must have exactly one mode, got {partition.steered_modes}"
        )
    cm, local = _restrict(sigma, partition)
    a_idx = mode_indices(local.steering_modes)
    det_a = float(np.linalg.det(cm.entries[np.ix_(a_idx, a_idx)]))
    det_sigma = cm.det()
    if det_a <= 0 or det_sigma <= 0:
        raise DomainError(f"Determinants must be positive (det A={det_a}, det sigma={det_sigma})", min(det_a, det_sigma))
    return 0.5 * math.log(det_a / det_sigma)


def steering_one_mode_steered(sigma: CovarianceLike, partition: ModePartition) -> float:
    """max{0, 1/2 ln(det A / det sigma)} for a single steered mode."""
    return max(0.0, _one_mode_signed(sigma, partition))


def steering_from_entropies(sigma: CovarianceLike, partition: ModePartition) -> float:
    """max{0, S(A) - S(sigma)} with S the Renyi-2 entropy."""
    if len(partition.steered_modes) != 1:
        raise ContractViolationError(
            f"Steered party must have exactly one mode, got {partition.steered_modes}"
        )
    cm, local = _restrict(sigma, partition)
    a_idx = mode_indices(local.steering_modes)
    reduced_a = CovarianceMatrix(entries=cm.entries[np.ix_(a_idx, a_idx)])
    return max(0.0, renyi2_entropy(reduced_a) - renyi2_entropy(cm))


def closed_form_signed(s, r, direction: Direction):
    """Closed-form steering before clamping; accepts scalars or numpy arrays."""
    s = np.asarray(s, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    C = np.cosh(2 * s)
    ch2, sh2 = np.cosh(r) ** 2, np.sinh(r) ** 2
    if direction == "A->B":
        return np.log(C) - np.log(ch2 + C * sh2)
    if direction == "B->A":
        return np.log(C * ch2 + sh2) - np.log(ch2 + C * sh2)
    if direction == "B->Bbar":
        return np.log(ch2 + sh2 / C)
    if direction == "Bbar->B":
        return np.log(sh2 + ch2 / C)
    raise ContractViolationError(f"Unknown direction {direction!r}; expected one of {DIRECTIONS}")


def closed_form_steering(s: float, r: float, direction: Direction) -> float:
    """Closed-form steering of the Hawking-channel states, clamped at zero."""
    s = as_squeezing(s).s
    r = as_hawking(r).r
    return max(0.0, float(closed_form_signed(s, r, direction)))


def closed_form_asymmetry(s, r, pair: Pair):
    """|G_backward - G_forward| from the closed forms; vectorized."""
    forward, backward = PAIR_DIRECTIONS[pair]
    g_f = np.maximum(0.0, closed_form_signed(s, r, forward))
    g_b = np.maximum(0.0, closed_form_signed(s, r, backward))
    return np.abs(g_b - g_f)


def reduced_state(s: float, r: float, pair: Pair) -> CovarianceMatrix:
    if pair == "AB":
        return reduced_ab(s, r)
    if pair == "BBbar":
        return reduced_bbbar(s, r)
    raise ContractViolationError(f"Unknown pair {pair!r}; expected 'AB' or 'BBbar'")


def direction_partition(direction: Direction) -> tuple[Pair, ModePartition]:
    """Pair and partition (on the reduced two-mode state) realizing a direction."""
    for pair, (forward, backward) in PAIR_DIRECTIONS.items():
        if direction == forward:
            return pair, FORWARD
        if direction == backward:
            return pair, BACKWARD
    raise ContractViolationError(f"Unknown direction {direction!r}; expected one of {DIRECTIONS}")


def general_steering(s: float, r: float, direction: Direction) -> float:
    """The Schur-complement computation on the matching reduced state."""
    pair, partition = direction_partition(direction)
    return gaussian_steering(reduced_state(s, r, pair), partition)


def steering_asymmetry(sigma: CovarianceLike, partition: ModePartition) -> SteeringReport:
    """Steering in both directions of a bipartition and their asymmetry (general path)."""
    forward = gaussian_steering_signed(sigma, partition)
    backward = gaussian_steering_signed(sigma, partition.swapped())
    return SteeringReport.from_signed(forward, backward, partition)


def steering_report(s: float, r: float, pair: Pair = "AB", method: Literal["closed", "general"] = "closed") -> SteeringReport:
    """Report for one of the two Hawking-channel bipartitions.

    AB: forward A->B, backward B->A. BBbar: forward B->Bbar, backward Bbar->B.

    Raises
    ------
    DomainError
        If the asymmetry exceeds ln 2 by more than rounding, which these state families
        never do.
    """
    s = as_squeezing(s).s
    r = as_hawking(r).r
    if method == "closed":
        forward, backward = (float(closed_form_signed(s, r, d)) for d in PAIR_DIRECTIONS[pair])
    else:
        sigma = reduced_state(s, r, pair)
        forward = gaussian_steering_signed(sigma, FORWARD)
        backward = gaussian_steering_signed(sigma, BACKWARD)

    report = SteeringReport.from_signed(forward, backward, FORWARD, s=s, r=r)
    # The log terms are about 2(s + r) in size.
    if report.asymmetry > LN2 + log_rounding(2 * (s + r)):
        logger.error(f"Asymmetry {report.asymmetry} exceeds ln 2 at s={s}, r={r} ({pair})")
        raise DomainError(f"Steering asymmetry {report.asymmetry} is not below ln 2", report.asymmetry)
    if report.asymmetry >= LN2:
        logger.debug(f"Asymmetry at s={s}, r={r} ({pair}) rounds to ln 2")
    return report
