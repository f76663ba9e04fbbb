"""Typed values for hawking-steering."""

from .covariance import CovarianceMatrix, SymplecticMatrix
from .partition import ModePartition
from .params import SqueezingParam, HawkingParam, ChannelParams
from .state import ThreeModeState, MODE_A, MODE_B, MODE_BBAR
from .report import (
    BonaFideReport,
    SteeringReport,
    ThresholdResult,
    AdjudicationRow,
    AdjudicationReport,
    BoundReport,
    MonotonicityReport,
)
from .config import SweepConfig, RRange, Pair, OutputFormat
from .validators import PhaseSpaceMatrix

__all__ = ["CovarianceMatrix", "SymplecticMatrix", "ModePartition", "SqueezingParam", "HawkingParam", "ChannelParams", "ThreeModeState", "MODE_A", "MODE_B", "MODE_BBAR", "BonaFideReport", "SteeringReport", "ThresholdResult", "AdjudicationRow", "AdjudicationReport", "BoundReport", "MonotonicityReport", "SweepConfig", "RRange", "Pair", "OutputFormat", "PhaseSpaceMatrix"]
