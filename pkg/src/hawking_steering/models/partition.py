"""Split of mode indices into a steering and a steered party."""

from typing import Annotated

from pydantic import BaseModel, Field, field_validator, model_validator

from hawking_steering.exceptions import ContractViolationError


class ModePartition(BaseModel):
    """Ordered split of mode indices: the steering party measures, the steered party is steered."""

    model_config = {"frozen": True}

    steering_modes: Annotated[
        tuple[int, ...],
        Field(description="Modes of the measuring party, strictly increasing", min_length=1),
    ]
    steered_modes: Annotated[
        tuple[int, ...],
        Field(description="Modes of the steered party, strictly increasing", min_length=1),
    ]

    @field_validator("steering_modes", "steered_modes")
    @classmethod
    def _increasing(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(i < 0 for i in value):
            raise ValueError(f"Mode indices must be non-negative, got {value}")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError(f"Mode indices must be strictly increasing, got {value}")
        return value

    @model_validator(mode="after")
    def _disjoint(self) -> "ModePartition":
        shared = set(self.steering_modes) & set(self.steered_modes)
        if shared:
            raise ValueError(f"Parties share modes {sorted(shared)}")
        return self

    @classmethod
    def of(cls, steering: int | tuple[int, ...], steered: int | tuple[int, ...]) -> "ModePartition":
        """Shorthand accepting single indices."""
        as_tuple = lambda v: (v,) if isinstance(v, int) else tuple(v)  # noqa: E731
        return cls(steering_modes=as_tuple(steering), steered_modes=as_tuple(steered))

    def swapped(self) -> "ModePartition":
        """Same bipartition with the roles exchanged."""
        return ModePartition(steering_modes=self.steered_modes, steered_modes=self.steering_modes)

    @property
    def modes(self) -> tuple[int, ...]:
        """Steering modes followed by steered modes."""
        return self.steering_modes + self.steered_modes

    def check_against(self, n_modes: int) -> None:
        """Raise if any index is outside 0..n_modes-1."""
        bad = [i for i in self.modes if i >= n_modes]
        if bad:
            raise ContractViolationError(f"Mode indices {bad} out of range for {n_modes} modes")
