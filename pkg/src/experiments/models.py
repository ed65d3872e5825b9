"""Experiment scenario, sweep grid and result models."""
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..signals.backends import BackendType
from ..signals.models import LinkConfig, SystemConfig
from ..utils.constants import (
    FIG4_COLUMNS,
    FIG4_KS_COLUMNS,
    FIG6_COLUMNS,
    LINK_AB,
    LINK_AE,
    LINK_BA,
    LINK_BE,
    LINK_EA,
    LINK_EB,
)

MAX_SEED = 2 ** 64 - 1


class Scenario(BaseModel):
    """Three-node Alice/Bob/Eve configuration for one experiment."""

    model_config = ConfigDict(frozen=True, extra="forbid", use_enum_values=False)

    system: SystemConfig = Field(default_factory=SystemConfig)
    link_ab: LinkConfig = Field(default_factory=lambda: LinkConfig(doppler_shift=200e6))
    link_ae: LinkConfig = Field(default_factory=lambda: LinkConfig(doppler_shift=500e6))
    link_be: LinkConfig = Field(default_factory=lambda: LinkConfig(doppler_shift=400e6))
    durations: int = Field(10_000, ge=1, description="Monte Carlo key durations D")
    seed: int = Field(20240917, ge=0, le=MAX_SEED)
    backend: BackendType = BackendType.GENERATIVE

    @property
    def link_ba(self) -> LinkConfig:
        return self.link_ab.reciprocal()

    @property
    def link_ea(self) -> LinkConfig:
        return self.link_ae.reciprocal()

    @property
    def link_eb(self) -> LinkConfig:
        return self.link_be.reciprocal()

    def links(self) -> Dict[str, LinkConfig]:
        """All six directed links keyed by label."""
        return {
            LINK_AB: self.link_ab,
            LINK_BA: self.link_ba,
            LINK_AE: self.link_ae,
            LINK_EA: self.link_ea,
            LINK_BE: self.link_be,
            LINK_EB: self.link_eb,
        }

    def with_pilot_length(self, pilot_length: int) -> "Scenario":
        return self.model_copy(update={"system": self.system.with_pilot_length(pilot_length)})

    def with_overrides(self, **updates: Any) -> "Scenario":
        """Validated copy with some top-level fields replaced (None values are ignored)."""
        data = self.model_dump()
        data.update({k: v for k, v in updates.items() if v is not None})
        return Scenario.model_validate(data)


class ExperimentGrid(BaseModel):
    """Sweep values shared by the figure experiments."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_values: Tuple[int, ...] = (10, 20, 50)
    n_range: Tuple[int, ...] = (2, 5, 10, 20, 50)
    gamma_grid: Tuple[float, ...] = (0.02, 0.05, 0.1, 0.2, 0.35, 0.5)
    quadrature_order: int = Field(100, ge=1)
    histogram_bins: int = Field(40, ge=1)
    quantization_step: float = Field(1.0, gt=0)

    @field_validator("n_values", "n_range")
    @classmethod
    def _positive_lengths(cls, values: Tuple[int, ...]) -> Tuple[int, ...]:
        if not values or any(v < 1 for v in values):
            raise ValueError("pilot lengths must be a nonempty list of integers >= 1")
        return values

    @field_validator("gamma_grid")
    @classmethod
    def _positive_gammas(cls, values: Tuple[float, ...]) -> Tuple[float, ...]:
        if not values or any(not (g > 0) for g in values):
            raise ValueError("gamma_grid must be a nonempty list of values > 0")
        return values


class KdrCurvePoint(BaseModel):
    """Theory and simulation KDR at one (N, γ)."""

    model_config = ConfigDict(frozen=True)

    pilot_length: int = Field(..., ge=1)
    gamma: float = Field(..., gt=0)
    kdr_theory: float = Field(..., ge=0, le=1)
    kdr_sim: float = Field(..., ge=0, le=1)
    stderr: float = Field(..., ge=0)
    durations: int = Field(..., ge=1)
    quadrature_order: int = Field(..., ge=1)

    def to_row(self) -> Dict[str, Any]:
        return dict(zip(FIG6_COLUMNS, (
            self.pilot_length, self.gamma, self.kdr_theory, self.kdr_sim,
            self.stderr, self.durations, self.quadrature_order,
        )))


class DurationRecord(BaseModel):
    """Estimates and key indices from one TDD key duration."""

    model_config = ConfigDict(frozen=True)

    duration_index: int
    delta: float
    theta_hat_ab: float
    theta_hat_ba: float
    theta_hat_ae: float
    theta_hat_be: float
    q_b: int
    q_a: int
    q_e_from_a: int
    q_e_from_b: int


class ExperimentResult:
    """Rows produced by one experiment, in output order."""

    def __init__(
        self,
        experiment: str,
        columns: Sequence[str],
        rows: Optional[List[Dict[str, Any]]] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        """Initialize experiment result."""
        self.experiment = experiment
        self.columns = tuple(columns)
        self.rows = rows or []
        self.metadata = metadata or {}

    def to_frame(self) -> pd.DataFrame:
        """Rows as a DataFrame with the declared column order."""
        return pd.DataFrame(self.rows, columns=list(self.columns))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'experiment': self.experiment,
            'columns': list(self.columns),
            'rows': self.rows,
            'metadata': self.metadata,
        }


class Fig4Result(ExperimentResult):
    """Histogram rows plus the raw per-node estimates and KS comparisons."""

    def __init__(
        self,
        rows: List[Dict[str, Any]],
        ks_rows: List[Dict[str, Any]],
        samples: Dict[int, Dict[str, np.ndarray]],
        metadata: Optional[Dict[str, Any]] = None,
    ):
        super().__init__('fig4', FIG4_COLUMNS, rows, metadata)
        self.ks_rows = ks_rows
        self.samples = samples

    def ks_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.ks_rows, columns=list(FIG4_KS_COLUMNS))


class Fig6Result(ExperimentResult):
    """KDR curve points."""

    def __init__(self, points: List[KdrCurvePoint], metadata: Optional[Dict[str, Any]] = None):
        super().__init__('fig6', FIG6_COLUMNS, [p.to_row() for p in points], metadata)
        self.points = points
