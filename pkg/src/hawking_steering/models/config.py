"""Sweep configuration."""

from pathlib import Path
from typing import Annotated, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from hawking_steering.tolerances import MAX_SQUEEZING

Pair = Literal["AB", "BBbar"]
OutputFormat = Literal["csv", "json"]


class RRange(BaseModel):
    """Closed range [min, max] sampled at ``steps`` evenly spaced points."""

    model_config = {"frozen": True}

    min: Annotated[float, Field(description="Lower end", ge=0)] = 0.0
    max: Annotated[float, Field(description="Upper end", le=MAX_SQUEEZING)] = 2.0
    steps: Annotated[int, Field(description="Number of samples", ge=2)] = 400

    @model_validator(mode="after")
    def _ordered(self) -> "RRange":
        if self.max <= self.min:
            raise ValueError(f"r_range max ({self.max}) must exceed min ({self.min})")
        return self

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)


class SweepConfig(BaseModel):
    """Parameters of one sweep over (s, r)."""

    model_config = {"frozen": True}

    pair: Annotated[Pair, Field(description="Bipartition: Alice|Bob or Bob|anti-Bob")] = "AB"
    s_values: Annotated[
        list[float],
        Field(description="Squeezing values (outer loop)", min_length=1),
    ] = [1.0]
    r_range: RRange = RRange()
    omega: Annotated[float, Field(description="Mode frequency for the temperature column", gt=0)] = 1.0
    output_path: Annotated[Optional[Path], Field(description="Where to write the table")] = None
    format: Annotated[OutputFormat, Field(description="Output format")] = "csv"

    @field_validator("s_values", mode="before")
    @classmethod
    def _listify(cls, value):
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("s_values")
    @classmethod
    def _in_range(cls, value: list[float]) -> list[float]:
        bad = [s for s in value if not 0 <= s <= MAX_SQUEEZING]
        if bad:
            raise ValueError(f"Squeezing values out of range [0, {MAX_SQUEEZING}]: {bad}")
        return value
