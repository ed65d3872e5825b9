"""Data models for the spacecraft link signal chain."""
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.exceptions import DomainError
from ..utils.constants import SPEED_OF_LIGHT
from ..utils.validators import require_positive, require_positive_int


class ModulationType(str, Enum):
    """Pilot modulation enumeration."""
    BPSK = "BPSK"


class SystemConfig(BaseModel):
    """System-wide transmission parameters shared by every link."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    carrier_freq: float = Field(1e9, gt=0, description="Carrier frequency f0 in Hz")
    symbol_period: float = Field(1.0 / 9.0, gt=0, description="Symbol period T in seconds")
    symbol_energy: float = Field(10.0, gt=0, description="Symbol energy Es, linear")
    noise_variance: float = Field(10.0 ** 0.1, ge=0, description="Noise variance, linear")
    path_loss_exponent: float = Field(2.0, ge=0)
    pilot_length: int = Field(10, ge=1, description="Pilot symbols per burst N")
    modulation: ModulationType = ModulationType.BPSK

    @property
    def delta_f(self) -> float:
        """Frequency sampling interval Δf = 1/(N T)."""
        return 1.0 / (self.pilot_length * self.symbol_period)

    def with_pilot_length(self, pilot_length: int) -> "SystemConfig":
        """Copy of this configuration with a different N."""
        pilot_length = require_positive_int(pilot_length, "pilot_length")
        return self.model_copy(update={"pilot_length": pilot_length})


class LinkConfig(BaseModel):
    """One directed spacecraft link."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    doppler_shift: float = Field(..., description="Signed Doppler shift in Hz")
    distance: float = Field(1.0, gt=0)

    def gain(self, path_loss_exponent: float) -> float:
        """Path-loss attenuation ζ = d^{-PL}."""
        return self.distance ** (-path_loss_exponent)

    def reciprocal(self) -> "LinkConfig":
        """The reverse direction: same geometry, Doppler negated."""
        return LinkConfig(doppler_shift=-self.doppler_shift, distance=self.distance)

    @classmethod
    def from_relative_velocity(
        cls,
        velocity_mps: float,
        carrier_freq: float,
        distance: float = 1.0,
    ) -> "LinkConfig":
        """
        Build a link from a relative radial velocity, ω = v·f0/c.

        Args:
            velocity_mps: Relative velocity in m/s (positive when closing)
            carrier_freq: Carrier frequency in Hz
            distance: Link distance

        Returns:
            LinkConfig for the forward direction
        """
        require_positive(carrier_freq, "carrier_freq")
        return cls(doppler_shift=velocity_mps * carrier_freq / SPEED_OF_LIGHT, distance=distance)


class ComplexSequence:
    """An ordered burst of complex baseband samples."""

    def __init__(self, samples: np.ndarray):
        samples = np.asarray(samples, dtype=complex)
        if samples.ndim != 1 or samples.size == 0:
            raise DomainError(f"Expected a nonempty 1-D sequence, got shape {samples.shape}")
        self.samples = samples

    def __len__(self) -> int:
        return self.samples.size

    def energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2))


class SpectrumSamples:
    """Power-spectrum observations S(i) of one burst."""

    def __init__(self, values: np.ndarray, bin_spacing: Optional[float] = None):
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise DomainError(f"Expected a nonempty 1-D spectrum, got shape {values.shape}")
        if np.any(values < 0):
            raise DomainError("Power-spectrum samples must be nonnegative")
        self.values = values
        self.bin_spacing = 1.0 / values.size if bin_spacing is None else bin_spacing

    def __len__(self) -> int:
        return self.values.size

    def total_power(self) -> float:
        return float(np.sum(self.values))
