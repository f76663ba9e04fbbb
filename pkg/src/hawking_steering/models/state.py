"""Three-mode state of Alice, Bob and anti-Bob."""

from typing import Annotated

from pydantic import BaseModel, Field

from .covariance import CovarianceMatrix

MODE_A = 0
MODE_B = 1
MODE_BBAR = 2
MODE_LABELS = ("A", "B", "Bbar")


class ThreeModeState(BaseModel):
    """Pure state on (A, B, Bbar) produced by the Hawking channel acting on Bob's mode."""

    model_config = {"frozen": True}

    cm: Annotated[CovarianceMatrix, Field(description="6x6 covariance matrix ordered (A, B, Bbar)")]
    s: Annotated[float, Field(description="Initial squeezing", ge=0)]
    r: Annotated[float, Field(description="Hawking squeezing", ge=0)]

    @property
    def labels(self) -> tuple[str, ...]:
        return MODE_LABELS
