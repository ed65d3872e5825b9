"""Monte Carlo experiments for the three-spacecraft scenario."""
from .models import (
    DurationRecord,
    ExperimentGrid,
    ExperimentResult,
    Fig4Result,
    Fig6Result,
    KdrCurvePoint,
    Scenario,
)
from .runner import ExperimentRunner, observe_duration, run_key_duration

__all__ = [
    "DurationRecord",
    "ExperimentGrid",
    "ExperimentResult",
    "ExperimentRunner",
    "Fig4Result",
    "Fig6Result",
    "KdrCurvePoint",
    "Scenario",
    "observe_duration",
    "run_key_duration",
]
