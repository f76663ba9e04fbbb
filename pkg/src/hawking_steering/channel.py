"""The Hawking-radiation channel as a two-mode squeezer on Bob's mode.

Bob's mode B and the interior mode Bbar (anti-Bob) are coupled by a two-mode squeezer
with parameter r, sinh r = (exp(Omega/T) - 1)^(-1/2), T = kappa / 2 pi. Acting on the
Alice-Bob two-mode squeezed state with Bbar in vacuum gives a pure three-mode state.
"""

import math

import numpy as np
from loguru import logger

from hawking_steering.exceptions import DomainError, ParameterRangeError
from hawking_steering.models import ChannelParams, CovarianceMatrix, HawkingParam, SymplecticMatrix, ThreeModeState
from hawking_steering.states import I2, Z2, as_squeezing, two_mode_squeezed, vacuum
from hawking_steering.symplectic import apply_symplectic, direct_sum, identity_symplectic, symplectic_direct_sum
from hawking_steering.tolerances import MAX_SQUEEZING

# Above this Omega/T, expm1 overflows and sinh r ~ exp(-Omega / 2T).
_EXPM1_OVERFLOW = 700.0


def as_hawking(r: float | HawkingParam) -> HawkingParam:
    if isinstance(r, HawkingParam):
        return r
    return HawkingParam(r=r)


def squeezer_symplectic(r: float | HawkingParam) -> SymplecticMatrix:
    """Two-mode squeezer on (B, Bbar): cosh r on the diagonal, sinh r Z off the diagonal."""
    r = as_hawking(r).r
    ch, sh = np.cosh(r), np.sinh(r)
    return SymplecticMatrix(entries=np.block([[ch * I2, sh * Z2], [sh * Z2, ch * I2]]))


def dilate(s: float, r: float | HawkingParam) -> ThreeModeState:
    """(I_A + S(r)) (TMSV(s) + I_Bbar) (I_A + S(r))^T on modes (A, B, Bbar)."""
    s = as_squeezing(s).s
    r = as_hawking(r).r
    channel = symplectic_direct_sum(identity_symplectic(1), squeezer_symplectic(r))
    initial = direct_sum(two_mode_squeezed(s), vacuum(1))
    cm = apply_symplectic(initial, channel)
    logger.debug(f"Dilated state for s={s}, r={r}, det={cm.det():.12g}")
    return ThreeModeState(cm=cm, s=s, r=r)


def _blocks(a: float, c: np.ndarray, b: float) -> np.ndarray:
    return np.block([[a * I2, c], [c.T, b * I2]])


def reduced_ab(s: float, r: float | HawkingParam) -> CovarianceMatrix:
    """Alice-Bob state after tracing out anti-Bob, in closed form."""
    s = as_squeezing(s).s
    r = as_hawking(r).r
    C = np.cosh(2 * s)
    ch2, sh2 = np.cosh(r) ** 2, np.sinh(r) ** 2
    return CovarianceMatrix(
        entries=_blocks(C, np.cosh(r) * np.sinh(2 * s) * Z2, C * ch2 + sh2)
    )


def reduced_bbbar(s: float, r: float | HawkingParam) -> CovarianceMatrix:
    """Bob-anti-Bob state after tracing out Alice, in closed form."""
    s = as_squeezing(s).s
    r = as_hawking(r).r
    C = np.cosh(2 * s)
    ch2, sh2 = np.cosh(r) ** 2, np.sinh(r) ** 2
    return CovarianceMatrix(
        entries=_blocks(C * ch2 + sh2, np.cosh(s) ** 2 * np.sinh(2 * r) * Z2, ch2 + C * sh2)
    )


def r_from_temperature(omega: float, temperature: float) -> HawkingParam:
    """r = arcsinh((exp(Omega/T) - 1)^(-1/2)).

    Raises
    ------
    DomainError
        If Omega or T is not positive.
    ParameterRangeError
        If T is so large that r exceeds the overflow guard.
    """
    if not omega > 0:
        raise DomainError(f"Mode frequency must be positive, got {omega}", omega)
    if not temperature > 0:
        raise DomainError(f"Hawking temperature must be positive, got {temperature}", temperature)

    x = omega / temperature
    if x > _EXPM1_OVERFLOW:
        r = math.asinh(math.exp(-0.5 * x))
    else:
        r = math.asinh(math.expm1(x) ** -0.5)

    if r > MAX_SQUEEZING:
        raise ParameterRangeError(f"T={temperature} gives r={r:.3f} above the guard {MAX_SQUEEZING}", r)
    if r == 0.0:
        # Underflow: the T -> 0 limit.
        return HawkingParam(r=0.0)
    return HawkingParam(r=r, provenance="temperature", omega=omega, temperature=temperature)


def _log_inverse_occupation(r: float) -> float:
    """ln(1 + 1/sinh^2 r) for r > 0, without underflow of sinh^2 r at tiny r."""
    sinh_r = math.sinh(r)
    if sinh_r >= 1.0:
        return math.log1p(1.0 / sinh_r**2)
    return math.log1p(sinh_r**2) - 2.0 * math.log(sinh_r)


def temperature_from_r(omega: float, r: float | HawkingParam, zero_limit: bool = False) -> float:
    """T = Omega / ln(1 + 1/sinh^2 r).

    Parameters
    ----------
    omega : float
        Mode frequency.
    r : float | HawkingParam
        Hawking squeezing.
    zero_limit : bool
        Return exactly 0 for r = 0 instead of raising.

    Raises
    ------
    DomainError
        If Omega is not positive, or r = 0 without ``zero_limit``.
    """
    r = as_hawking(r).r
    if not omega > 0:
        raise DomainError(f"Mode frequency must be positive, got {omega}", omega)
    if r == 0.0:
        if zero_limit:
            return 0.0
        raise DomainError("r = 0 corresponds to T = 0; pass zero_limit=True to accept it", r)
    return omega / _log_inverse_occupation(r)


def temperatures(omega: float, r_values: np.ndarray) -> np.ndarray:
    """Vectorized ``temperature_from_r`` with T = 0 at r = 0."""
    if not omega > 0:
        raise DomainError(f"Mode frequency must be positive, got {omega}", omega)
    r_values = np.asarray(r_values, dtype=np.float64)
    out = np.zeros_like(r_values)
    positive = r_values > 0
    sinh_r = np.sinh(r_values[positive])
    log_occupation = np.where(
        sinh_r >= 1.0,
        np.log1p(1.0 / np.maximum(sinh_r, 1.0) ** 2),
        np.log1p(np.minimum(sinh_r, 1.0) ** 2) - 2.0 * np.log(sinh_r),
    )
    out[positive] = omega / log_occupation
    return out


def hawking_temperature(surface_gravity: float) -> float:
    """T = kappa / 2 pi."""
    if not surface_gravity > 0:
        raise DomainError(f"Surface gravity must be positive, got {surface_gravity}", surface_gravity)
    return surface_gravity / (2 * math.pi)


def surface_gravity(temperature: float) -> float:
    """kappa = 2 pi T."""
    if not temperature > 0:
        raise DomainError(f"Hawking temperature must be positive, got {temperature}", temperature)
    return 2 * math.pi * temperature


def r_from_surface_gravity(omega: float, kappa: float) -> HawkingParam:
    """sinh r = (exp(2 pi Omega / kappa) - 1)^(-1/2), via T = kappa / 2 pi."""
    temperature = hawking_temperature(kappa)
    param = r_from_temperature(omega, temperature)
    if param.provenance == "direct":
        return param
    return HawkingParam(
        r=param.r,
        provenance="surface_gravity",
        omega=omega,
        temperature=temperature,
        surface_gravity=kappa,
    )


def channel_params(s: float, r: float, omega: float = 1.0) -> ChannelParams:
    """Parameter point with the Hawking temperature filled in from r."""
    return ChannelParams(s=s, r=r, omega=omega, temperature=temperature_from_r(omega, r, zero_limit=True))
