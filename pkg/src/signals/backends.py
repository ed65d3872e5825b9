"""Observation backends: how a receiver's spectrum samples are produced."""
import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Optional, Union

import numpy as np

from ..core.exceptions import UsageError
from .models import ComplexSequence, LinkConfig, SpectrumSamples, SystemConfig
from .spectral import draw_spectrum_generative, theoretical_npsds
from .waveform import apply_link, generate_pilots, power_spectrum

logger = logging.getLogger(__name__)


class BackendType(str, Enum):
    """Observation backend enumeration."""
    WAVEFORM = "waveform"
    GENERATIVE = "generative"


class ObservationBackend(ABC):
    """Base class for the two ways of observing a pilot burst."""

    backend_type: BackendType

    def __init__(self, system: SystemConfig):
        """
        Initialize backend.

        Args:
            system: System parameters shared by every link
        """
        self.system = system

    @abstractmethod
    def transmit(self, rng: np.random.Generator) -> Optional[ComplexSequence]:
        """
        Produce the transmitter's pilot burst.

        Returns:
            The burst, or None when the backend does not model time samples
        """
        pass

    @abstractmethod
    def observe(
        self,
        pilots: Optional[ComplexSequence],
        link: LinkConfig,
        rng: np.random.Generator,
    ) -> SpectrumSamples:
        """
        Spectrum samples seen by the receiver of one link.

        Args:
            pilots: Output of transmit() for the same burst
            link: The directed link to the receiver
            rng: The link's own random stream

        Returns:
            N power-spectrum samples
        """
        pass


class WaveformBackend(ObservationBackend):
    """Synthesize time samples, pass them through the link and take the DFT."""

    backend_type = BackendType.WAVEFORM

    def transmit(self, rng: np.random.Generator) -> ComplexSequence:
        return generate_pilots(self.system, rng)

    def observe(self, pilots, link, rng):
        if pilots is None:
            raise UsageError("Waveform backend needs the transmitted pilots")
        received = apply_link(pilots, link, self.system, rng)
        return power_spectrum(received, self.system.delta_f)


class GenerativeBackend(ObservationBackend):
    """Draw spectrum samples directly from the exponential model around Θ."""

    backend_type = BackendType.GENERATIVE

    def transmit(self, rng: np.random.Generator) -> None:
        return None

    def observe(self, pilots, link, rng):
        return draw_spectrum_generative(theoretical_npsds(link, self.system), self.system, rng)


_BACKENDS = {
    BackendType.WAVEFORM: WaveformBackend,
    BackendType.GENERATIVE: GenerativeBackend,
}


def get_backend(kind: Union[BackendType, str], system: SystemConfig) -> ObservationBackend:
    """Instantiate the backend named by kind."""
    try:
        backend_type = BackendType(kind)
    except ValueError:
        raise UsageError(
            f"Unknown backend {kind!r}; expected one of {[b.value for b in BackendType]}"
        )
    return _BACKENDS[backend_type](system)
