"""Parameters of the initial state and the Hawking channel."""

import math
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from hawking_steering.tolerances import MAX_SQUEEZING

Provenance = Literal["direct", "temperature", "surface_gravity"]


class SqueezingParam(BaseModel):
    """Two-mode squeezing of the initial Alice-Bob state."""

    model_config = {"frozen": True}

    s: Annotated[
        float,
        Field(
            description="Dimensionless squeezing of the initial two-mode squeezed state",
            ge=0,
            le=MAX_SQUEEZING,
            allow_inf_nan=False,
        ),
    ] = 0.0


class HawkingParam(BaseModel):
    """Squeezing r of the channel acting on Bob's mode, optionally derived from (Omega, T) or (Omega, kappa).

    Natural units G = c = hbar = k_B = 1.
    """

    model_config = {"frozen": True}

    r: Annotated[
        float,
        Field(
            description="Dimensionless Hawking squeezing, sinh r = (exp(Omega/T) - 1)^(-1/2)",
            ge=0,
            le=MAX_SQUEEZING,
            allow_inf_nan=False,
        ),
    ] = 0.0

    provenance: Annotated[
        Provenance,
        Field(description="How r was obtained"),
    ] = "direct"

    omega: Annotated[
        Optional[float],
        Field(description="Mode frequency", gt=0),
    ] = None

    temperature: Annotated[
        Optional[float],
        Field(description="Hawking temperature T = kappa / 2 pi", gt=0),
    ] = None

    surface_gravity: Annotated[
        Optional[float],
        Field(description="Surface gravity kappa of the black hole", gt=0),
    ] = None

    @model_validator(mode="after")
    def _consistent(self) -> "HawkingParam":
        if self.provenance == "direct":
            return self
        if self.omega is None or self.temperature is None:
            raise ValueError(f"Provenance '{self.provenance}' needs omega and temperature")
        if self.provenance == "surface_gravity":
            if self.surface_gravity is None:
                raise ValueError("Provenance 'surface_gravity' needs surface_gravity")
            if not math.isclose(self.temperature, self.surface_gravity / (2 * math.pi), rel_tol=1e-12):
                raise ValueError("temperature must equal surface_gravity / 2 pi")
        if self.r == 0:
            raise ValueError("r = 0 is the T -> 0 limit; use provenance 'direct'")
        # sinh^2 r * (e^{Omega/T} - 1) = 1, in logs so large Omega/T does not overflow
        x = self.omega / self.temperature
        log_expm1 = x + math.log1p(-math.exp(-x)) if x > 1 else math.log(math.expm1(x))
        log_residual = 2 * math.log(math.sinh(self.r)) + log_expm1
        if abs(log_residual) > 1e-10:
            raise ValueError(f"r={self.r} is inconsistent with Omega={self.omega}, T={self.temperature}")
        return self


class ChannelParams(BaseModel):
    """One parameter point: squeezing s, Hawking squeezing r, mode frequency and temperature."""

    model_config = {"frozen": True}

    s: Annotated[float, Field(description="Initial squeezing", ge=0, le=MAX_SQUEEZING)]
    r: Annotated[float, Field(description="Hawking squeezing", ge=0, le=MAX_SQUEEZING)]
    omega: Annotated[float, Field(description="Mode frequency", gt=0)] = 1.0
    temperature: Annotated[
        float,
        Field(description="Hawking temperature; exactly 0 in the r = 0 limit", ge=0),
    ] = 0.0
