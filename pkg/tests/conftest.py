import numpy as np
import pytest
from hypothesis import strategies as st

from hawking_steering.states import I2, Z2
from hawking_steering.symplectic import symplectic_direct_sum

MAX_TEST_SQUEEZING = 1.5


def single_mode_squeezer(r: float) -> np.ndarray:
    return np.diag([np.exp(-r), np.exp(r)])


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def beam_splitter(theta: float) -> np.ndarray:
    """Mixes modes 0 and 1 with transmissivity cos^2 theta."""
    c, s = np.cos(theta), np.sin(theta)
    return np.block([[c * I2, s * I2], [-s * I2, c * I2]])


def two_mode_squeezer(r: float) -> np.ndarray:
    return np.block([[np.cosh(r) * I2, np.sinh(r) * Z2], [np.sinh(r) * Z2, np.cosh(r) * I2]])


def embed(two_mode: np.ndarray, i: int, j: int, n_modes: int) -> np.ndarray:
    """Act with a 4x4 two-mode symplectic on modes i < j of n modes."""
    S = np.eye(2 * n_modes)
    idx = [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]
    S[np.ix_(idx, idx)] = two_mode
    return S


def random_symplectic(rng: np.random.Generator, n_modes: int, layers: int = 2) -> np.ndarray:
    """Composition of local squeezers, rotations, beam splitters and two-mode squeezers."""
    S = np.eye(2 * n_modes)
    for _ in range(layers):
        local = symplectic_direct_sum(
            *(
                rotation(rng.uniform(0, 2 * np.pi)) @ single_mode_squeezer(rng.uniform(-0.5, 0.5))
                for _ in range(n_modes)
            )
        ).entries
        S = local @ S
        for i in range(n_modes - 1):
            S = embed(beam_splitter(rng.uniform(0, np.pi)), i, i + 1, n_modes) @ S
            S = embed(two_mode_squeezer(rng.uniform(0, 0.5)), i, i + 1, n_modes) @ S
    return S


def random_state(rng: np.random.Generator, n_modes: int, mixed: bool = True) -> np.ndarray:
    """S diag(nu_k I2) S^T with nu_k >= 1 (all ones when ``mixed`` is False)."""
    nu = rng.uniform(1.0, 3.0, size=n_modes) if mixed else np.ones(n_modes)
    S = random_symplectic(rng, n_modes)
    sigma = S @ np.kron(np.diag(nu), I2) @ S.T
    return (sigma + sigma.T) / 2


squeezings = st.floats(min_value=0.0, max_value=MAX_TEST_SQUEEZING, allow_nan=False)
hawking_r = st.floats(min_value=0.0, max_value=MAX_TEST_SQUEEZING, allow_nan=False)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def thermal_pair() -> np.ndarray:
    """Two-mode thermal state with symplectic eigenvalues (1.5, 2.5) and correlations."""
    S = two_mode_squeezer(0.4) @ embed(beam_splitter(0.3), 0, 1, 2)
    sigma = S @ np.diag([1.5, 1.5, 2.5, 2.5]) @ S.T
    return (sigma + sigma.T) / 2


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "sweep.json"
    path.write_text('{"pair": "BBbar", "s_values": [0.5, 1.0], "r_range": {"min": 0.0, "max": 1.0, "steps": 5}}')
    return path
