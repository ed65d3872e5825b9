"""Pilot synthesis, link model and power-spectrum observations."""
from .backends import BackendType, GenerativeBackend, ObservationBackend, WaveformBackend, get_backend
from .models import ComplexSequence, LinkConfig, ModulationType, SpectrumSamples, SystemConfig
from .spectral import draw_spectrum_generative, nominal_psd_bpsk, sub_bin_offset, theoretical_npsds
from .waveform import apply_link, generate_pilots, power_spectrum

__all__ = [
    "BackendType",
    "ComplexSequence",
    "GenerativeBackend",
    "LinkConfig",
    "ModulationType",
    "ObservationBackend",
    "SpectrumSamples",
    "SystemConfig",
    "WaveformBackend",
    "apply_link",
    "draw_spectrum_generative",
    "generate_pilots",
    "get_backend",
    "nominal_psd_bpsk",
    "power_spectrum",
    "sub_bin_offset",
    "theoretical_npsds",
]
