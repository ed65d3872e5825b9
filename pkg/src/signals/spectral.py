"""Nominal power spectral density model and the generative spectrum sampler."""
import logging
import math
from typing import Union

import numpy as np

from ..utils.validators import require_positive
from .models import LinkConfig, SpectrumSamples, SystemConfig

logger = logging.getLogger(__name__)


def nominal_psd_bpsk(f: Union[float, np.ndarray], cfg: SystemConfig) -> Union[float, np.ndarray]:
    """
    Rectangular-pulse BPSK spectrum A^x(f) = Es·T·sinc²(fT).

    np.sinc is the normalized sinc sin(πu)/(πu).
    """
    value = cfg.symbol_energy * cfg.symbol_period * np.sinc(np.asarray(f, dtype=float) * cfg.symbol_period) ** 2
    if np.ndim(value) == 0:
        return float(value)
    return value


def sub_bin_offset(doppler_shift: float, delta_f: float) -> float:
    """
    Doppler offset folded into [-Δf/2, Δf/2].

    The fold is taken on |ω| and the sign restored, so opposite shifts map to
    exactly opposite offsets.
    """
    folded = math.fmod(abs(doppler_shift), delta_f)
    if folded > 0.5 * delta_f:
        folded -= delta_f
    return folded if doppler_shift >= 0 else -folded


def theoretical_npsds(link: LinkConfig, cfg: SystemConfig) -> float:
    """
    Expected power-spectrum sample Θ = ζ² A^x(δ) + σ² of one link.

    Depends on the Doppler shift only through the folded offset δ and is
    even in it, so reciprocal links share the same value.
    """
    zeta = link.gain(cfg.path_loss_exponent)
    offset = abs(sub_bin_offset(link.doppler_shift, cfg.delta_f))
    return zeta * zeta * nominal_psd_bpsk(offset, cfg) + cfg.noise_variance


def draw_spectrum_generative(
    theta: float,
    cfg: SystemConfig,
    rng: np.random.Generator,
) -> SpectrumSamples:
    """
    Draw N i.i.d. exponential spectrum samples with mean Θ.

    Args:
        theta: Expected sample value Θ > 0
        cfg: System parameters (N and Δf)
        rng: Random stream (consumed: N exponentials)
    """
    require_positive(theta, "theta")
    return SpectrumSamples(rng.exponential(theta, size=cfg.pilot_length), cfg.delta_f)
