"""Result records for steering, thresholds and the analysis reports."""

from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field

from hawking_steering.tolerances import STEERABLE_TOL

from .config import Pair
from .partition import ModePartition

Regime = Literal["none", "two-way", "one-way-forward", "one-way-backward"]


class BonaFideReport(BaseModel):
    """Outcome of the uncertainty-principle test sigma + i Omega >= 0."""

    model_config = {"frozen": True}

    physical: bool
    min_eigenvalue: Annotated[float, Field(description="Smallest eigenvalue of sigma + i Omega")]

    def __bool__(self) -> bool:
        return self.physical


class SteeringReport(BaseModel):
    """Both directional steerings of one bipartition and their asymmetry, in nats.

    Forward means steering party -> steered party of ``partition``; backward is the
    reverse direction.
    """

    model_config = {"frozen": True}

    g_forward: Annotated[float, Field(description="Forward Gaussian steering", ge=0)]
    g_backward: Annotated[float, Field(description="Backward Gaussian steering", ge=0)]
    asymmetry: Annotated[float, Field(description="|g_backward - g_forward|", ge=0)]
    forward_steerable: bool
    backward_steerable: bool
    g_forward_signed: Annotated[float, Field(description="Forward steering before the max{0, .} clamp")]
    g_backward_signed: Annotated[float, Field(description="Backward steering before the max{0, .} clamp")]
    regime: Annotated[Regime, Field(description="Which directions are steerable")]
    partition: ModePartition
    s: Optional[float] = None
    r: Optional[float] = None

    @classmethod
    def from_signed(
        cls,
        forward_signed: float,
        backward_signed: float,
        partition: ModePartition,
        s: Optional[float] = None,
        r: Optional[float] = None,
    ) -> "SteeringReport":
        """Clamp the signed values and derive asymmetry, flags and regime."""
        g_forward = max(0.0, forward_signed)
        g_backward = max(0.0, backward_signed)
        forward = g_forward > STEERABLE_TOL
        backward = g_backward > STEERABLE_TOL
        if forward and backward:
            regime: Regime = "two-way"
        elif forward:
            regime = "one-way-forward"
        elif backward:
            regime = "one-way-backward"
        else:
            regime = "none"
        return cls(
            g_forward=g_forward,
            g_backward=g_backward,
            asymmetry=abs(g_backward - g_forward),
            forward_steerable=forward,
            backward_steerable=backward,
            g_forward_signed=forward_signed,
            g_backward_signed=backward_signed,
            regime=regime,
            partition=partition,
            s=s,
            r=r,
        )


class ThresholdResult(BaseModel):
    """Sudden death / sudden birth roots and asymmetry peaks at one squeezing value."""

    model_config = {"frozen": True}

    s: float
    r_death_AtoB: Annotated[Optional[float], Field(description="Root of the unclamped A->B steering")] = None
    r_birth_BbartoB: Annotated[Optional[float], Field(description="Root of the unclamped Bbar->B steering")] = None
    r_max_asymmetry_AB: Annotated[Optional[float], Field(description="argmax over r of the A|B asymmetry")] = None
    r_max_asymmetry_BBbar: Annotated[Optional[float], Field(description="argmax over r of the B|Bbar asymmetry")] = None
    asymmetry_at_max: Annotated[Optional[float], Field(description="Peak A|B asymmetry")] = None
    asymmetry_at_max_BBbar: Annotated[Optional[float], Field(description="Peak B|Bbar asymmetry")] = None
    bracket_width: Annotated[float, Field(description="Final bisection bracket width", ge=0)] = 0.0
    residual_death: Optional[float] = None
    residual_birth: Optional[float] = None
    iterations: int = 0

    @property
    def roots_coincide(self) -> Optional[float]:
        """|r_death - r_birth|, or None when either root is missing."""
        if self.r_death_AtoB is None or self.r_birth_BbartoB is None:
            return None
        return abs(self.r_death_AtoB - self.r_birth_BbartoB)

    @property
    def peak_offset_AB(self) -> Optional[float]:
        if self.r_death_AtoB is None or self.r_max_asymmetry_AB is None:
            return None
        return abs(self.r_max_asymmetry_AB - self.r_death_AtoB)

    @property
    def peak_offset_BBbar(self) -> Optional[float]:
        if self.r_birth_BbartoB is None or self.r_max_asymmetry_BBbar is None:
            return None
        return abs(self.r_max_asymmetry_BBbar - self.r_birth_BbartoB)


class AdjudicationRow(BaseModel):
    """Residuals of the two candidate critical-point relations at one squeezing value."""

    model_config = {"frozen": True}

    s: float
    r_critical: float
    residual_printed: Annotated[float, Field(description="s - arccosh(cosh^2 r / (1 - sinh^2 r))")]
    residual_doubled: Annotated[float, Field(description="2s - arccosh(cosh^2 r / (1 - sinh^2 r))")]
    residual_polynomial: Annotated[float, Field(description="cosh(2s)(1 - sinh^2 r) - cosh^2 r")]


class AdjudicationReport(BaseModel):
    model_config = {"frozen": True}

    rows: list[AdjudicationRow]
    verdict: Literal["printed", "doubled", "neither"]
    max_residual_printed: float
    max_residual_doubled: float
    roots_increasing: bool


class BoundReport(BaseModel):
    """Supremum of the steering asymmetry over a grid, compared with ln 2."""

    model_config = {"frozen": True}

    pair: Pair
    supremum: float
    s_at_supremum: float
    r_at_supremum: float
    margin: Annotated[float, Field(description="ln 2 - supremum")]
    below_bound: Annotated[bool, Field(description="Supremum does not exceed ln 2 beyond rounding")]


class MonotonicityReport(BaseModel):
    """Whether the asymmetry is non-decreasing in s at every fixed r of a grid."""

    model_config = {"frozen": True}

    pair: Pair
    columns: int
    violating_columns: int
    first_violation_r: Optional[float] = None
    ridge_non_decreasing: bool

    @property
    def violation_fraction(self) -> float:
        return self.violating_columns / self.columns if self.columns else 0.0
