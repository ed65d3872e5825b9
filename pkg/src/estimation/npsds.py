"""Maximum-likelihood NPSDS estimation and error metrics."""
import logging
import math
from typing import Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.exceptions import DomainError
from ..signals.models import SpectrumSamples
from ..utils.validators import require_nonempty, require_positive, require_positive_int

logger = logging.getLogger(__name__)

SpectrumInput = Union[SpectrumSamples, Sequence[float], np.ndarray]


class NpsdsEstimate(BaseModel):
    """Estimated NPSDS with its normalized form."""

    model_config = ConfigDict(frozen=True)

    raw: float = Field(..., ge=0, description="Sample-mean estimate Θ̂")
    normalized: float = Field(..., ge=0, description="η·Θ̂")
    normalizer: float = Field(..., gt=0, description="η = N/Θ")


def _values(samples: SpectrumInput) -> np.ndarray:
    if isinstance(samples, SpectrumSamples):
        return samples.values
    values = np.asarray(samples, dtype=float)
    require_nonempty(values.reshape(-1), "spectrum samples")
    if np.any(values < 0):
        raise DomainError("Power-spectrum samples must be nonnegative")
    return values


def estimate_npsds(samples: SpectrumInput) -> float:
    """
    ML estimate of Θ from N exponential spectrum samples: their arithmetic mean.

    The sum is correctly rounded, so the result does not depend on sample order.
    """
    values = _values(samples)
    return math.fsum(values.tolist()) / values.size


def normalize(raw: float, theta_true: float, pilot_length: int) -> NpsdsEstimate:
    """
    Scale an estimate by η = N/Θ.

    Args:
        raw: Estimate Θ̂ >= 0
        theta_true: Reference NPSDS Θ > 0
        pilot_length: N

    Returns:
        NpsdsEstimate with normalized = η·raw
    """
    require_positive(theta_true, "theta_true")
    pilot_length = require_positive_int(pilot_length, "pilot_length")
    normalizer = pilot_length / theta_true
    return NpsdsEstimate(raw=raw, normalized=normalizer * raw, normalizer=normalizer)


def mse(estimates: Sequence[float], theta_true: float) -> float:
    """Mean squared deviation of per-duration estimates from the reference Θ."""
    values = np.asarray(estimates, dtype=float)
    require_nonempty(values.reshape(-1), "estimates")
    return float(np.mean((values - theta_true) ** 2))


def log_likelihood(theta: float, samples: SpectrumInput) -> float:
    """Log-likelihood of Θ for exponential samples, dropping constants: -N ln Θ - ΣS/Θ."""
    require_positive(theta, "theta")
    values = _values(samples)
    return -values.size * math.log(theta) - math.fsum(values.tolist()) / theta
