"""Gaussian quantum steering and its asymmetry under the Hawking-radiation channel."""

from hawking_steering.analysis import (
    adjudicate_critical_formula,
    critical_ridge,
    figure,
    find_death_birth,
    scan_asymmetry_monotonicity,
    sweep,
    verify_ln2_bound,
)
from hawking_steering.channel import (
    channel_params,
    dilate,
    hawking_temperature,
    r_from_surface_gravity,
    r_from_temperature,
    reduced_ab,
    reduced_bbbar,
    surface_gravity,
    temperature_from_r,
)
from hawking_steering.states import two_mode_squeezed, vacuum
from hawking_steering.steering import (
    closed_form_steering,
    gaussian_steering,
    nonsteerability_min_eigenvalue,
    steering_asymmetry,
    steering_from_entropies,
    steering_one_mode_steered,
    steering_report,
)
from hawking_steering.symplectic import (
    apply_symplectic,
    check_bona_fide,
    direct_sum,
    partial_trace,
    renyi2_entropy,
    schur_complement,
    symplectic_eigenvalues,
    symplectic_form,
)

__all__ = [
    "adjudicate_critical_formula",
    "apply_symplectic",
    "channel_params",
    "check_bona_fide",
    "closed_form_steering",
    "critical_ridge",
    "dilate",
    "direct_sum",
    "figure",
    "find_death_birth",
    "gaussian_steering",
    "hawking_temperature",
    "nonsteerability_min_eigenvalue",
    "partial_trace",
    "r_from_surface_gravity",
    "r_from_temperature",
    "reduced_ab",
    "reduced_bbbar",
    "renyi2_entropy",
    "scan_asymmetry_monotonicity",
    "schur_complement",
    "steering_asymmetry",
    "steering_from_entropies",
    "steering_one_mode_steered",
    "steering_report",
    "surface_gravity",
    "sweep",
    "symplectic_eigenvalues",
    "symplectic_form",
    "temperature_from_r",
    "two_mode_squeezed",
    "vacuum",
    "verify_ln2_bound",
]
