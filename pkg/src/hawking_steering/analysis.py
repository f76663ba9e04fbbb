"""Parameter sweeps, thresholds and the checks behind the steering figures.

Sweeps evaluate the closed forms and audit a fixed subset of rows against the general
Schur-complement path. Roots of the unclamped steerings are found by bisection, and the
asymmetry peaks by golden-section search seeded from a grid scan.
"""

import math
import os
from multiprocessing import Pool
from typing import Callable, Iterable, Literal, Optional, Sequence, get_args

import numpy as np
import pandas as pd
from loguru import logger
from scipy.optimize import bisect, minimize_scalar

from hawking_steering.channel import temperatures
from hawking_steering.exceptions import AuditError, ConfigError, DomainError
from hawking_steering.models import (
    AdjudicationReport,
    AdjudicationRow,
    BoundReport,
    MonotonicityReport,
    Pair,
    RRange,
    SweepConfig,
    ThresholdResult,
)
from hawking_steering.steering import (
    LN2,
    PAIR_DIRECTIONS,
    closed_form_asymmetry,
    closed_form_signed,
    general_steering,
    reduced_state,
)
from hawking_steering.tolerances import log_rounding, steering_tolerance

COLUMNS = ["s", "r", "T", "G_forward", "G_backward", "G_delta"]
AUDIT_EVERY = 50
AUDIT_TOL = 1e-10
# Rows whose general-path error estimate exceeds this are not audited.
AUDIT_RESOLVABLE = 1e-6

ROOT_TOL = 1e-12
MAX_BISECTIONS = 200
GOLDEN_XTOL = 1e-10
SCAN_POINTS = 301

# Past sinh r = 1 the A->B steering is negative for every s.
DEATH_BRACKET = (0.0, math.asinh(1.0) - 1e-9)
BIRTH_BRACKET = (0.0, 3.0)
ASYMMETRY_RANGE = (0.0, 3.0)

FigureName = Literal["fig1a", "fig1b", "fig2", "fig3"]
FIGURES: dict[str, SweepConfig] = {
    "fig1a": SweepConfig(pair="AB", s_values=[1.0], r_range=RRange(min=0.0, max=2.0, steps=400)),
    "fig2": SweepConfig(
        pair="AB",
        s_values=np.linspace(0.0, 2.0, 200).tolist(),
        r_range=RRange(min=0.0, max=2.0, steps=200),
    ),
    "fig3": SweepConfig(pair="BBbar", s_values=[1.0], r_range=RRange(min=0.0, max=2.0, steps=400)),
}
FIG1B_POINTS = 400


def default_jobs() -> int:
    return os.cpu_count() or 1


def _sweep_block(args: tuple[float, np.ndarray, float, str]) -> np.ndarray:
    """Rows (s, r, T, G_forward, G_backward, G_delta) for one squeezing value."""
    s, r_values, omega, pair = args
    forward, backward = PAIR_DIRECTIONS[pair]
    g_forward = np.maximum(0.0, closed_form_signed(s, r_values, forward))
    g_backward = np.maximum(0.0, closed_form_signed(s, r_values, backward))
    return np.column_stack(
        [
            np.full_like(r_values, s),
            r_values,
            temperatures(omega, r_values),
            g_forward,
            g_backward,
            np.abs(g_backward - g_forward),
        ]
    )


def audit_rows(table: pd.DataFrame, pair: Pair, every: int = AUDIT_EVERY) -> int:
    """Recompute every ``every``-th row with the general path.

    A direction is compared when the Schur-complement path can resolve it, that is when
    ``steering_tolerance`` for its symplectic eigenvalue is at most ``AUDIT_RESOLVABLE``.
    Strongly squeezed rows past that point are skipped.

    Returns
    -------
    int
        Number of rows with at least one direction audited.

    Raises
    ------
    AuditError
        If an audited value differs from the closed form by more than ``steering_tolerance``
        (1e-10 nats for moderate entries).
    """
    forward, backward = PAIR_DIRECTIONS[pair]
    audited = skipped = 0
    for index in range(0, len(table), every):
        row = table.iloc[index]
        s, r = float(row["s"]), float(row["r"])
        scale = float(np.max(np.abs(reduced_state(s, r, pair).entries)))
        compared = False
        for column, direction in (("G_forward", forward), ("G_backward", backward)):
            nu = math.exp(-float(closed_form_signed(s, r, direction)))
            tol = steering_tolerance(scale, nu, AUDIT_TOL)
            if tol > AUDIT_RESOLVABLE:
                skipped += 1
                continue
            general = general_steering(s, r, direction)
            if abs(general - row[column]) > tol:
                logger.warning(f"Audit mismatch at row {index}: {direction} closed={row[column]!r} general={general!r}")
                raise AuditError(
                    f"{direction} at s={row['s']}, r={row['r']}: closed form {row[column]} vs general {general}",
                    general - row[column],
                )
            compared = True
        audited += compared
    if skipped:
        logger.debug(f"Skipped {skipped} audit comparisons beyond double-precision resolution")
    logger.debug(f"Audited {audited} of {len(table)} rows")
    return audited


def sweep(config: SweepConfig, jobs: int = 1) -> pd.DataFrame:
    """Table of steerings over the (s, r) grid of ``config``, s outer and r inner.

    The grid is split by squeezing value; with ``jobs > 1`` the blocks are evaluated in a
    process pool and reassembled in order, so the table does not depend on ``jobs``.
    """
    if jobs < 1:
        raise ConfigError(f"jobs must be at least 1, got {jobs}")
    r_values = config.r_range.values()
    tasks = [(float(s), r_values, config.omega, config.pair) for s in config.s_values]
    logger.info(f"Sweeping {config.pair} over {len(tasks)} squeezing values x {len(r_values)} r values (jobs={jobs})")

    if jobs == 1 or len(tasks) == 1:
        blocks = [_sweep_block(task) for task in tasks]
    else:
        with Pool(processes=min(jobs, len(tasks))) as pool:
            blocks = list(pool.imap(_sweep_block, tasks))

    table = pd.DataFrame(np.vstack(blocks), columns=COLUMNS)
    audit_rows(table, config.pair)
    return table


def _bisect_root(f: Callable[[float], float], bracket: tuple[float, float]) -> tuple[Optional[float], int, float]:
    """Root of ``f`` on ``bracket`` if f changes sign there.

    Returns
    -------
    tuple
        (root or None, iterations, final bracket width)
    """
    a, b = bracket
    fa, fb = f(a), f(b)
    if not ((fa > 0 > fb) or (fa < 0 < fb)):
        logger.debug(f"No sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")
        return None, 0, b - a

    root, info = bisect(f, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=MAX_BISECTIONS, full_output=True)
    width = (b - a) / 2**info.iterations
    residual = abs(f(root))
    if residual >= ROOT_TOL:
        logger.warning(f"Bisection residual {residual:.3e} above {ROOT_TOL} at r={root}")
    return float(root), info.iterations, width


def signed_steering_function(s: float, direction: str) -> Callable[[float], float]:
    """r -> unclamped closed-form steering at fixed s."""
    return lambda r: float(closed_form_signed(s, r, direction))


def _golden_argmax(g: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> tuple[float, float]:
    """Maximizer and maximum of ``g`` on [lo, hi]: grid scan, then golden section around the best point."""
    grid = np.linspace(lo, hi, SCAN_POINTS)
    values = g(grid)
    i = int(np.argmax(values))
    if i == 0 or i == len(grid) - 1:
        return float(grid[i]), float(values[i])
    if not (values[i] > values[i - 1] and values[i] > values[i + 1]):
        logger.debug(f"Flat maximum near r={grid[i]}; keeping the grid point")
        return float(grid[i]), float(values[i])

    result = minimize_scalar(
        lambda x: -float(g(x)),
        bracket=(grid[i - 1], grid[i], grid[i + 1]),
        method="golden",
        options={"xtol": GOLDEN_XTOL},
    )
    return float(result.x), -float(result.fun)


def find_death_birth(s: float) -> ThresholdResult:
    """Sudden-death root of A->B, sudden-birth root of Bbar->B, and the asymmetry peaks at squeezing s."""
    if s < 0:
        raise DomainError(f"Squeezing must be non-negative, got {s}", s)

    r_death, it_death, width_death = _bisect_root(signed_steering_function(s, "A->B"), DEATH_BRACKET)
    r_birth, it_birth, width_birth = _bisect_root(signed_steering_function(s, "Bbar->B"), BIRTH_BRACKET)

    if s == 0:
        logger.info("s = 0: no initial entanglement, no thresholds")
        return ThresholdResult(s=s, r_death_AtoB=r_death, r_birth_BbartoB=r_birth)

    r_peak_ab, peak_ab = _golden_argmax(lambda r: closed_form_asymmetry(s, r, "AB"), *ASYMMETRY_RANGE)
    r_peak_bb, peak_bb = _golden_argmax(lambda r: closed_form_asymmetry(s, r, "BBbar"), *ASYMMETRY_RANGE)

    result = ThresholdResult(
        s=s,
        r_death_AtoB=r_death,
        r_birth_BbartoB=r_birth,
        r_max_asymmetry_AB=r_peak_ab,
        r_max_asymmetry_BBbar=r_peak_bb,
        asymmetry_at_max=peak_ab,
        asymmetry_at_max_BBbar=peak_bb,
        bracket_width=max(width_death, width_birth),
        residual_death=None if r_death is None else abs(closed_form_signed(s, r_death, "A->B")),
        residual_birth=None if r_birth is None else abs(closed_form_signed(s, r_birth, "Bbar->B")),
        iterations=it_death + it_birth,
    )
    logger.info(
        f"s={s}: death r={r_death}, birth r={r_birth}, peak AB r={r_peak_ab} ({peak_ab:.10f}), "
        f"peak BBbar r={r_peak_bb}"
    )
    return result


def critical_r(s: float) -> Optional[float]:
    """Sudden-death root of the A->B steering, by bisection."""
    root, _, _ = _bisect_root(signed_steering_function(s, "A->B"), DEATH_BRACKET)
    return root


def adjudicate_critical_formula(s_grid: Sequence[float]) -> AdjudicationReport:
    """Test s = arccosh(cosh^2 r*/(1 - sinh^2 r*)) against 2s = arccosh(...) at the numerical roots r*."""
    rows = []
    for s in s_grid:
        if not 0 < s <= 3:
            logger.warning(f"Skipping s={s}: adjudication needs s in (0, 3]")
            continue
        r = critical_r(s)
        if r is None:
            logger.warning(f"No death root at s={s}")
            continue
        ch2, sh2 = math.cosh(r) ** 2, math.sinh(r) ** 2
        argument = ch2 / (1 - sh2)
        rows.append(
            AdjudicationRow(
                s=s,
                r_critical=r,
                residual_printed=s - math.acosh(argument),
                residual_doubled=2 * s - math.acosh(argument),
                residual_polynomial=math.cosh(2 * s) * (1 - sh2) - ch2,
            )
        )
    if not rows:
        raise ConfigError("Adjudication grid has no usable squeezing values")

    max_printed = max(abs(row.residual_printed) for row in rows)
    max_doubled = max(abs(row.residual_doubled) for row in rows)
    if max_doubled < 1e-8 <= max_printed:
        verdict = "doubled"
    elif max_printed < 1e-8 <= max_doubled:
        verdict = "printed"
    else:
        verdict = "neither"
    roots = [row.r_critical for row in rows]
    report = AdjudicationReport(
        rows=rows,
        verdict=verdict,
        max_residual_printed=max_printed,
        max_residual_doubled=max_doubled,
        roots_increasing=all(b > a for a, b in zip(roots, roots[1:])),
    )
    logger.info(f"Critical-point verdict: {verdict} (max residuals: printed {max_printed:.3e}, doubled {max_doubled:.3e})")
    return report


def _axis(upper: float, step: float) -> np.ndarray:
    return np.linspace(0.0, upper, int(round(upper / step)) + 1)


def verify_ln2_bound(pair: Pair = "AB", s_max: float = 6.0, r_max: float = 6.0, step: float = 0.01) -> BoundReport:
    """Supremum of the asymmetry over [0, s_max] x [0, r_max].

    Raises
    ------
    DomainError
        If the supremum exceeds ln 2 by more than rounding. For s_max above about 19
        the supremum rounds to ln 2 itself and the margin is at rounding level.
    """
    if step <= 0 or s_max <= 0 or r_max <= 0:
        raise ConfigError(f"Invalid bound grid: s_max={s_max}, r_max={r_max}, step={step}")
    s_axis, r_axis = _axis(s_max, step), _axis(r_max, step)
    surface = closed_form_asymmetry(s_axis[:, None], r_axis[None, :], pair)
    i, j = np.unravel_index(int(np.argmax(surface)), surface.shape)
    supremum = float(surface[i, j])
    report = BoundReport(
        pair=pair,
        supremum=supremum,
        s_at_supremum=float(s_axis[i]),
        r_at_supremum=float(r_axis[j]),
        margin=LN2 - supremum,
        below_bound=supremum <= LN2 + log_rounding(2 * (s_max + r_max)),
    )
    logger.info(f"{pair}: sup asymmetry {supremum:.12f} at s={report.s_at_supremum}, r={report.r_at_supremum}, margin {report.margin:.3e}")
    if not report.below_bound:
        raise DomainError(f"Asymmetry supremum {supremum} is not below ln 2", supremum)
    return report


def critical_ridge(s_grid: Iterable[float]) -> pd.DataFrame:
    """Asymmetry of both pairs at the sudden-death root r*(s)."""
    rows = []
    for s in s_grid:
        r = critical_r(s) if s > 0 else None
        if r is None:
            continue
        rows.append(
            {
                "s": s,
                "r_critical": r,
                "G_delta_AB": float(closed_form_asymmetry(s, r, "AB")),
                "G_delta_BBbar": float(closed_form_asymmetry(s, r, "BBbar")),
            }
        )
    return pd.DataFrame(rows, columns=["s", "r_critical", "G_delta_AB", "G_delta_BBbar"])


def scan_asymmetry_monotonicity(
    s_grid: Sequence[float], r_grid: Sequence[float], pair: Pair = "AB", tol: float = 1e-12
) -> MonotonicityReport:
    """Check, column by column, whether the asymmetry is non-decreasing in s at fixed r."""
    s_axis = np.asarray(sorted(s_grid), dtype=np.float64)
    r_axis = np.asarray(r_grid, dtype=np.float64)
    surface = closed_form_asymmetry(s_axis[:, None], r_axis[None, :], pair)
    decreasing = np.any(np.diff(surface, axis=0) < -tol, axis=0)
    violating = np.flatnonzero(decreasing)

    ridge = critical_ridge(s_axis)
    column = "G_delta_AB" if pair == "AB" else "G_delta_BBbar"
    ridge_ok = bool(np.all(np.diff(ridge[column].to_numpy()) >= -tol))

    report = MonotonicityReport(
        pair=pair,
        columns=len(r_axis),
        violating_columns=len(violating),
        first_violation_r=float(r_axis[violating[0]]) if len(violating) else None,
        ridge_non_decreasing=ridge_ok,
    )
    logger.info(
        f"{pair}: asymmetry non-decreasing in s on {report.columns - report.violating_columns}/{report.columns} r columns; "
        f"ridge non-decreasing: {ridge_ok}"
    )
    return report


def figure(name: FigureName, jobs: int = 1) -> pd.DataFrame:
    """Dataset behind one of the steering figures."""
    if name == "fig1b":
        r_values = np.linspace(0.0, 2.0, FIG1B_POINTS + 1)[1:]
        return pd.DataFrame({"r": r_values, "T": temperatures(1.0, r_values)})
    if name not in FIGURES:
        raise ConfigError(f"Unknown figure {name!r}; expected one of {list(get_args(FigureName))}")
    return sweep(FIGURES[name], jobs=jobs)
