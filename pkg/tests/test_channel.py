import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from conftest import hawking_r, squeezings
from hawking_steering.channel import (
    channel_params,
    dilate,
    hawking_temperature,
    r_from_surface_gravity,
    r_from_temperature,
    reduced_ab,
    reduced_bbbar,
    squeezer_symplectic,
    surface_gravity,
    temperature_from_r,
    temperatures,
)
from hawking_steering.exceptions import DomainError, ParameterRangeError
from hawking_steering.models import MODE_A, MODE_B, MODE_BBAR
from hawking_steering.symplectic import check_bona_fide, partial_trace, symplectic_eigenvalues
from hawking_steering.tolerances import conditioned_tolerance


def purity_tolerance(sigma: np.ndarray) -> float:
    return conditioned_tolerance(float(np.max(np.abs(sigma))), floor=1e-9)


def test_squeezer_symplectic():
    S = squeezer_symplectic(0.5)
    assert S.dim == 4
    assert S.entries[0, 0] == pytest.approx(math.cosh(0.5))
    assert S.entries[1, 3] == pytest.approx(-math.sinh(0.5))


def test_dilate_zero_channel():
    """r = 0 leaves Bob untouched and anti-Bob in vacuum."""
    state = dilate(1.0, 0.0)
    np.testing.assert_allclose(partial_trace(state.cm, [MODE_BBAR]).entries, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(reduced_ab(1.0, 0.0).entries[:2, :2], math.cosh(2.0) * np.eye(2))
    assert state.labels == ("A", "B", "Bbar")


def test_dilate_bob_block():
    cm = dilate(1.0, 0.5).cm
    assert cm.entries[2, 2] == pytest.approx(math.cosh(2.0) * math.cosh(0.5) ** 2 + math.sinh(0.5) ** 2, rel=1e-13)
    assert cm.entries[2, 2] == pytest.approx(5.0553, abs=1e-4)


@seed(19)
@settings(max_examples=50, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_dilation_is_pure(s, r):
    cm = dilate(s, r).cm
    nu = symplectic_eigenvalues(cm)
    np.testing.assert_allclose(nu, np.ones(3), atol=purity_tolerance(cm.entries))
    assert cm.det() == pytest.approx(1.0, abs=purity_tolerance(cm.entries))
    assert check_bona_fide(cm).physical


@seed(23)
@settings(max_examples=50, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_reduced_states_match_partial_traces(s, r):
    cm = dilate(s, r).cm
    scale = float(np.max(np.abs(cm.entries)))
    np.testing.assert_allclose(
        partial_trace(cm, [MODE_A, MODE_B]).entries, reduced_ab(s, r).entries, rtol=1e-12, atol=1e-12 * scale
    )
    np.testing.assert_allclose(
        partial_trace(cm, [MODE_B, MODE_BBAR]).entries, reduced_bbbar(s, r).entries, rtol=1e-12, atol=1e-12 * scale
    )


@pytest.mark.parametrize("s, r", [(0.0, 0.0), (1.0, 0.5), (2.0, 2.0), (3.0, 3.0)])
def test_purity_on_large_parameters(s, r):
    """Conditioning-aware tolerance up to (3, 3), where entries reach about 2e4."""
    cm = dilate(s, r).cm
    nu = symplectic_eigenvalues(cm)
    np.testing.assert_allclose(nu, np.ones(3), atol=purity_tolerance(cm.entries))


def test_r_from_temperature():
    param = r_from_temperature(1.0, 1.0)
    assert param.r == pytest.approx(0.7033, abs=2e-4)
    assert param.r == pytest.approx(math.asinh(1 / math.sqrt(math.e - 1)), abs=1e-15)
    assert param.provenance == "temperature"
    assert temperature_from_r(1.0, param) == pytest.approx(1.0, rel=1e-12)


def test_r_from_temperature_limits():
    # Omega / T = 800 is past the expm1 overflow point but r is still representable.
    cold = r_from_temperature(1.0, 1 / 800)
    assert cold.r == pytest.approx(math.exp(-400.0), rel=1e-12)

    frozen = r_from_temperature(1.0, 1e-4)
    assert frozen.r == 0.0
    assert frozen.provenance == "direct"

    with pytest.raises(ParameterRangeError):
        r_from_temperature(1.0, 1e30)
    for omega, temperature in ((0.0, 1.0), (1.0, 0.0), (-1.0, 1.0), (1.0, -2.0)):
        with pytest.raises(DomainError):
            r_from_temperature(omega, temperature)


@seed(29)
@settings(max_examples=50, deadline=None)
@given(
    omega=st.floats(min_value=0.1, max_value=10.0),
    temperature=st.floats(min_value=0.05, max_value=20.0),
)
def test_temperature_round_trip(omega, temperature):
    param = r_from_temperature(omega, temperature)
    assert temperature_from_r(omega, param) == pytest.approx(temperature, rel=1e-10)


def test_cold_temperature_round_trip():
    # sinh^2 r underflows to zero here.
    param = r_from_temperature(1.0, 1e-3)
    assert param.provenance == "temperature"
    assert param.r == pytest.approx(math.exp(-500.0), rel=1e-12)
    assert temperature_from_r(1.0, param) == pytest.approx(1e-3, rel=1e-10)
    assert temperatures(1.0, np.array([0.0, param.r]))[1] == pytest.approx(1e-3, rel=1e-10)


def test_temperature_from_r_zero():
    assert temperature_from_r(1.0, 0.0, zero_limit=True) == 0.0
    with pytest.raises(DomainError):
        temperature_from_r(1.0, 0.0)
    with pytest.raises(DomainError):
        temperature_from_r(0.0, 0.5)


def test_temperatures_vectorized():
    r_values = np.array([0.0, 0.5, 1.0, 2.0])
    T = temperatures(1.0, r_values)
    assert T[0] == 0.0
    np.testing.assert_allclose(T[1:], [temperature_from_r(1.0, r) for r in r_values[1:]], rtol=1e-14)
    assert np.all(np.diff(T) > 0)


def test_surface_gravity_round_trip():
    assert hawking_temperature(2 * math.pi) == pytest.approx(1.0)
    assert surface_gravity(1.0) == pytest.approx(2 * math.pi)
    param = r_from_surface_gravity(1.0, 2 * math.pi)
    assert param.provenance == "surface_gravity"
    assert param.surface_gravity == pytest.approx(2 * math.pi)
    assert param.r == pytest.approx(r_from_temperature(1.0, 1.0).r, rel=1e-14)
    with pytest.raises(DomainError):
        hawking_temperature(0.0)


def test_channel_params():
    params = channel_params(1.0, 0.5)
    assert params.temperature == pytest.approx(1.0 / math.log1p(1.0 / math.sinh(0.5) ** 2))
    assert channel_params(1.0, 0.0).temperature == 0.0
