import math

import numpy as np
import pytest
from hypothesis import given, seed, settings

from conftest import hawking_r, random_state, seeds, squeezings
from hawking_steering.channel import dilate, reduced_ab, reduced_bbbar
from hawking_steering.exceptions import ContractViolationError, DomainError
from hawking_steering.models import ModePartition
from hawking_steering.states import two_mode_squeezed
from hawking_steering.steering import (
    BACKWARD,
    DIRECTIONS,
    FORWARD,
    LN2,
    closed_form_asymmetry,
    closed_form_signed,
    closed_form_steering,
    direction_partition,
    gaussian_steering,
    general_steering,
    nonsteerability_min_eigenvalue,
    reduced_state,
    steering_asymmetry,
    steering_from_entropies,
    steering_one_mode_steered,
    steering_report,
)
from hawking_steering.tolerances import steering_tolerance

S_ANCHOR, R_ANCHOR = 1.0, 0.5


def independent_signed(s: float, r: float) -> dict[str, float]:
    """The four unclamped directional steerings written out with the math module."""
    C = math.cosh(2 * s)
    ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
    return {
        "A->B": math.log(C / (ch2 + C * sh2)),
        "B->A": math.log((C * ch2 + sh2) / (ch2 + C * sh2)),
        "B->Bbar": math.log(ch2 + sh2 / C),
        "Bbar->B": math.log(sh2 + ch2 / C),
    }


def independent_steerings(s: float, r: float) -> dict[str, float]:
    return {direction: max(0.0, g) for direction, g in independent_signed(s, r).items()}


def test_two_mode_squeezed_steering():
    """Both directions of a two-mode squeezed vacuum carry ln cosh 2s."""
    sigma = two_mode_squeezed(1.0)
    assert gaussian_steering(sigma, FORWARD) == pytest.approx(1.3251, abs=2e-4)
    assert gaussian_steering(sigma, FORWARD) == pytest.approx(math.log(math.cosh(2.0)), abs=1e-12)
    assert gaussian_steering(sigma, BACKWARD) == pytest.approx(math.log(math.cosh(2.0)), abs=1e-12)
    assert gaussian_steering(np.eye(4), FORWARD) == 0.0


@pytest.mark.parametrize(
    "direction, expected",
    [("A->B", 0.4951), ("B->A", 0.7905), ("B->Bbar", 0.2955), ("Bbar->B", 0.0)],
)
def test_anchor_values(direction, expected):
    oracle = independent_steerings(S_ANCHOR, R_ANCHOR)[direction]
    assert closed_form_steering(S_ANCHOR, R_ANCHOR, direction) == pytest.approx(oracle, abs=1e-12)
    assert general_steering(S_ANCHOR, R_ANCHOR, direction) == pytest.approx(oracle, abs=1e-10)
    assert oracle == pytest.approx(expected, abs=2e-4)


@seed(31)
@settings(max_examples=80, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_closed_form_matches_general_path(s, r):
    oracle = independent_steerings(s, r)
    for direction in DIRECTIONS:
        closed = closed_form_steering(s, r, direction)
        assert closed == pytest.approx(oracle[direction], abs=1e-12)
        assert general_steering(s, r, direction) == pytest.approx(closed, abs=1e-10)


@seed(37)
@settings(max_examples=40, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_three_mode_state_agrees_with_reduced_states(s, r):
    """Steering computed on the full dilation, with the third mode traced out, matches the reduced states."""
    cm = dilate(s, r).cm
    assert gaussian_steering(cm, ModePartition.of(0, 1)) == pytest.approx(
        gaussian_steering(reduced_ab(s, r), FORWARD), abs=1e-10
    )
    assert gaussian_steering(cm, ModePartition.of(2, 1)) == pytest.approx(
        gaussian_steering(reduced_bbbar(s, r), BACKWARD), abs=1e-10
    )


@seed(41)
@settings(max_examples=40, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_pure_three_mode_cut(s, r):
    """Across A | (B, Bbar) the state is pure, so each direction carries ln cosh 2s."""
    cm = dilate(s, r).cm
    expected = math.log(math.cosh(2 * s))
    assert gaussian_steering(cm, ModePartition.of(0, (1, 2))) == pytest.approx(expected, abs=1e-9)
    assert gaussian_steering(cm, ModePartition.of((1, 2), 0)) == pytest.approx(expected, abs=1e-9)


@seed(43)
@settings(max_examples=40, deadline=None)
@given(state_seed=seeds)
def test_one_mode_formulas_agree(state_seed):
    """Schur complement, determinant ratio and Renyi-2 entropies give the same steering."""
    rng = np.random.default_rng(state_seed)
    sigma = random_state(rng, 3)
    for partition in (ModePartition.of(0, 1), ModePartition.of((0, 2), 1), ModePartition.of((1, 2), 0)):
        general = gaussian_steering(sigma, partition)
        assert steering_one_mode_steered(sigma, partition) == pytest.approx(general, abs=1e-9)
        assert steering_from_entropies(sigma, partition) == pytest.approx(general, abs=1e-9)


@seed(47)
@settings(max_examples=40, deadline=None)
@given(state_seed=seeds)
def test_nonsteerability_criterion(state_seed):
    """sigma + i(0 + Omega_B) has a negative eigenvalue exactly when the steering is positive."""
    rng = np.random.default_rng(state_seed)
    sigma = random_state(rng, 2)
    for partition in (FORWARD, BACKWARD):
        g = gaussian_steering(sigma, partition)
        min_eig = nonsteerability_min_eigenvalue(sigma, partition)
        if g > 1e-6:
            assert min_eig < 0
        elif g == 0.0:
            assert min_eig > -1e-9


def test_nonsteerability_on_hawking_states():
    sigma = reduced_ab(1.0, 1.0)
    assert nonsteerability_min_eigenvalue(sigma, FORWARD) > -1e-10
    assert nonsteerability_min_eigenvalue(sigma, BACKWARD) < 0


def test_one_mode_formulas_need_single_steered_mode():
    partition = ModePartition.of(0, (1, 2))
    with pytest.raises(ContractViolationError):
        steering_one_mode_steered(np.eye(6), partition)
    with pytest.raises(ContractViolationError):
        steering_from_entropies(np.eye(6), partition)


def test_unphysical_input():
    with pytest.raises(DomainError):
        gaussian_steering(0.5 * np.eye(4), FORWARD)
    with pytest.raises(ContractViolationError):
        gaussian_steering(np.eye(4), ModePartition.of(0, 2))


def test_steering_report_regimes():
    report = steering_report(S_ANCHOR, R_ANCHOR, "AB")
    assert report.regime == "two-way"
    assert report.asymmetry == pytest.approx(0.7905 - 0.4951, abs=2e-4)

    past_death = steering_report(1.0, 1.0, "AB")
    assert past_death.regime == "one-way-backward"
    assert past_death.g_forward == 0.0
    assert past_death.g_forward_signed < 0

    horizon = steering_report(S_ANCHOR, R_ANCHOR, "BBbar")
    assert horizon.regime == "one-way-forward"
    assert horizon.g_backward_signed < 0

    assert steering_report(1.0, 0.0, "BBbar").regime == "none"


@pytest.mark.parametrize("pair", ["AB", "BBbar"])
@pytest.mark.parametrize("s, r", [(0.3, 0.2), (1.0, 0.5), (1.0, 1.2), (2.0, 0.9)])
def test_steering_report_methods_agree(pair, s, r):
    closed = steering_report(s, r, pair)
    general = steering_report(s, r, pair, method="general")
    assert general.g_forward_signed == pytest.approx(closed.g_forward_signed, abs=1e-10)
    assert general.g_backward_signed == pytest.approx(closed.g_backward_signed, abs=1e-10)
    assert general.regime == closed.regime


def test_steering_asymmetry_general_path(thermal_pair):
    report = steering_asymmetry(thermal_pair, FORWARD)
    assert report.asymmetry == pytest.approx(abs(report.g_backward - report.g_forward))
    assert report.partition == FORWARD


def test_zero_squeezing():
    """Without initial squeezing Alice is uncorrelated; the horizon pair is steerable both ways equally."""
    assert closed_form_steering(0.0, 0.8, "A->B") == 0.0
    assert closed_form_steering(0.0, 0.8, "B->A") == 0.0
    assert closed_form_steering(0.0, 0.8, "B->Bbar") == pytest.approx(math.log(math.cosh(1.6)))
    assert closed_form_steering(0.0, 0.8, "Bbar->B") == pytest.approx(math.log(math.cosh(1.6)))
    r = np.linspace(0, 3, 31)
    np.testing.assert_allclose(closed_form_asymmetry(0.0, r, "AB"), 0.0, atol=1e-15)
    np.testing.assert_allclose(closed_form_asymmetry(0.0, r, "BBbar"), 0.0, atol=1e-15)


def test_zero_channel():
    """At r = 0 Alice-Bob is symmetric and Bob-anti-Bob is a product state."""
    g = math.log(math.cosh(2.0))
    assert closed_form_steering(1.0, 0.0, "A->B") == pytest.approx(g)
    assert closed_form_steering(1.0, 0.0, "B->A") == pytest.approx(g)
    assert closed_form_steering(1.0, 0.0, "B->Bbar") == 0.0
    assert closed_form_steering(1.0, 0.0, "Bbar->B") == 0.0


def test_unknown_direction():
    with pytest.raises(ContractViolationError):
        closed_form_signed(1.0, 0.5, "A->Bbar")
    with pytest.raises(ContractViolationError):
        general_steering(1.0, 0.5, "A->Bbar")


@seed(53)
@settings(max_examples=80, deadline=None)
@given(s=squeezings, r=hawking_r)
def test_asymmetry_identities(s, r):
    """The two pairs share one asymmetry function, bounded by ln 2."""
    ab = float(closed_form_asymmetry(s, r, "AB"))
    bb = float(closed_form_asymmetry(s, r, "BBbar"))
    assert ab == pytest.approx(bb, abs=1e-12)
    assert 0.0 <= ab < LN2
    t = math.tanh(s) ** 2
    assert ab <= math.log((1 + 3 * t) / (1 + t)) + 1e-12


def test_monotone_in_r():
    r = np.linspace(0.0, 2.0, 401)
    forward_horizon = closed_form_signed(1.0, r, "B->Bbar")
    assert np.all(np.diff(forward_horizon) > 0)
    death = np.maximum(0.0, closed_form_signed(1.0, r, "A->B"))
    assert np.all(np.diff(death) <= 0)


def test_closed_forms_on_full_grid():
    """61 x 61 grid over [0, 3]^2; the Schur-complement error scales as max|sigma| / nu."""
    grid = np.linspace(0.0, 3.0, 61)
    for s in grid:
        for r in grid:
            signed = independent_signed(s, r)
            for pair, partition_directions in (("AB", ("A->B", "B->A")), ("BBbar", ("B->Bbar", "Bbar->B"))):
                scale = float(np.max(np.abs(reduced_state(s, r, pair).entries)))
                for direction in partition_directions:
                    tol = steering_tolerance(scale, math.exp(-signed[direction]))
                    assert tol < 2e-8
                    assert general_steering(s, r, direction) == pytest.approx(max(0.0, signed[direction]), abs=tol)


def test_steering_tolerance_is_literal_for_moderate_states():
    for direction in DIRECTIONS:
        pair, _ = direction_partition(direction)
        scale = float(np.max(np.abs(reduced_state(S_ANCHOR, R_ANCHOR, pair).entries)))
        nu = math.exp(-independent_signed(S_ANCHOR, R_ANCHOR)[direction])
        assert steering_tolerance(scale, nu) == 1e-10


def test_asymmetry_at_rounding_limit():
    """Near s = 20 the asymmetry at sinh r = 1 rounds to ln 2 without exceeding it."""
    report = steering_report(20.0, math.asinh(1.0), "AB")
    assert report.asymmetry == pytest.approx(LN2, abs=1e-13)
    assert report.regime == "one-way-backward"
    assert steering_report(25.0, math.asinh(1.0), "BBbar").asymmetry == pytest.approx(LN2, abs=1e-13)


def test_asymmetry_swaps_with_partition(thermal_pair):
    forward = steering_asymmetry(thermal_pair, FORWARD)
    backward = steering_asymmetry(thermal_pair, BACKWARD)
    assert backward.asymmetry == forward.asymmetry
    assert backward.g_forward == forward.g_backward
    assert backward.g_backward == forward.g_forward


def test_backward_dominates_forward_on_grid():
    """B->A >= A->B everywhere, and B->A > 0 whenever s > 0."""
    s = np.linspace(0.05, 3.0, 60)[:, None]
    r = np.linspace(0.0, 3.0, 61)[None, :]
    forward = np.maximum(0.0, closed_form_signed(s, r, "A->B"))
    backward = np.maximum(0.0, closed_form_signed(s, r, "B->A"))
    assert np.all(backward > 0)
    assert np.all(backward - forward >= -1e-12)


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_alice_bob_steerings_decrease_in_r(s):
    r = np.linspace(0.0, 2.0, 401)
    assert np.all(np.diff(np.maximum(0.0, closed_form_signed(s, r, "A->B"))) <= 0)
    assert np.all(np.diff(closed_form_signed(s, r, "B->A")) < 0)
