"""Time-domain pilot synthesis, link impairments and the power spectrum."""
import logging
from typing import Optional

import numpy as np

from ..core.exceptions import DomainError, UsageError
from .models import ComplexSequence, LinkConfig, ModulationType, SpectrumSamples, SystemConfig

logger = logging.getLogger(__name__)


def generate_pilots(cfg: SystemConfig, rng: np.random.Generator) -> ComplexSequence:
    """
    Draw one burst of N equiprobable BPSK pilots ±√Es.

    Args:
        cfg: System parameters
        rng: Random stream (consumed: N integers)

    Returns:
        ComplexSequence of length N
    """
    if cfg.modulation != ModulationType.BPSK:
        raise UsageError(f"Unsupported modulation: {cfg.modulation}")
    signs = 2.0 * rng.integers(0, 2, size=cfg.pilot_length) - 1.0
    return ComplexSequence(signs * np.sqrt(cfg.symbol_energy) + 0j)


def apply_link(
    x: ComplexSequence,
    link: LinkConfig,
    cfg: SystemConfig,
    rng: np.random.Generator,
) -> ComplexSequence:
    """
    Pass a burst through one link: y(i) = ζ x(i) e^{j2πω iT} + κ(i).

    κ is circular complex Gaussian with variance σ²; no noise is drawn
    when σ² = 0.
    """
    if len(x) != cfg.pilot_length:
        raise DomainError(
            f"Burst length {len(x)} does not match pilot length {cfg.pilot_length}"
        )
    i = np.arange(cfg.pilot_length, dtype=float)
    # Whole cycles carry no phase
    cycles = np.mod(link.doppler_shift * cfg.symbol_period * i, 1.0)
    y = link.gain(cfg.path_loss_exponent) * x.samples * np.exp(2j * np.pi * cycles)
    if cfg.noise_variance > 0:
        scale = np.sqrt(cfg.noise_variance / 2.0)
        noise = rng.standard_normal(cfg.pilot_length) + 1j * rng.standard_normal(cfg.pilot_length)
        y = y + scale * noise
    return ComplexSequence(y)


def power_spectrum(y: ComplexSequence, bin_spacing: Optional[float] = None) -> SpectrumSamples:
    """
    Periodogram S(i) = |Y(i)|² of the orthonormal DFT.

    With the 1/√N scaling Σ S(i) equals Σ |y(i)|².

    Args:
        y: Received burst
        bin_spacing: Δf in Hz; defaults to the normalized spacing 1/N
    """
    spectrum = np.fft.fft(y.samples, norm="ortho")
    return SpectrumSamples(np.abs(spectrum) ** 2, bin_spacing)
