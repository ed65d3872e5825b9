"""Monte Carlo sampler for the hierarchical estimate model."""
import logging
from typing import Tuple

import numpy as np

from ..utils.validators import require_positive_int

logger = logging.getLogger(__name__)


def sample_hierarchical(
    pilot_length: int,
    draws: int,
    rng: np.random.Generator,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw normalized estimate pairs (Θ̃_ab, Θ̃_ba).

    Θ̃_ab ~ Gamma(N, 1), then Θ̃_ba | Θ̃_ab ~ noncentral chi-square with 2N
    degrees of freedom and noncentrality Θ̃_ab.

    Args:
        pilot_length: N
        draws: Number of pairs D
        rng: Random stream (consumed: D gammas then D noncentral chi-squares)

    Returns:
        Two arrays of length D
    """
    pilot_length = require_positive_int(pilot_length, "pilot_length")
    draws = require_positive_int(draws, "draws")
    theta_ab = rng.gamma(pilot_length, 1.0, size=draws)
    theta_ba = rng.noncentral_chisquare(2 * pilot_length, theta_ab)
    return theta_ab, theta_ba
