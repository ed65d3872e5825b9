"""Generalized Marcum-Q function for integer order."""
import logging
import math

import numpy as np

from ..core.exceptions import DomainError
from ..utils.validators import require_nonnegative, require_nonnegative_int, require_positive_int
from .gamma import ln_gamma, regularized_gamma_lower, regularized_gamma_upper

logger = logging.getLogger(__name__)

# Poisson mass left outside the summed range
POISSON_TAIL_TOL = 1e-14


def poisson_upper_tail(count: int, lam: float) -> float:
    """
    P(X > count) for X ~ Poisson(lam), as the regularized lower gamma P(count + 1, lam).

    Evaluated directly rather than as 1 - Σpmf, which stalls at the rounding
    level of the partial sum.
    """
    count = require_nonnegative_int(count, "count")
    require_nonnegative(lam, "lam")
    return regularized_gamma_lower(count + 1.0, lam)


def _poisson_weights(lam: float) -> np.ndarray:
    """Poisson(lam) probabilities for j = 0..J with P(X > J) below POISSON_TAIL_TOL."""
    if lam == 0:
        return np.ones(1)
    span = int(math.ceil(lam + 10.0 * math.sqrt(lam) + 10.0))
    while poisson_upper_tail(span, lam) > POISSON_TAIL_TOL:
        span *= 2
    j = np.arange(span + 1, dtype=float)
    return np.exp(j * math.log(lam) - lam - ln_gamma(j + 1.0))


def _upper_gamma_ladder(order: int, y: float, steps: int) -> np.ndarray:
    """
    Q(order + j, y) for j = 0..steps.

    Uses Q(s + 1, y) = Q(s, y) + e^{-y} y^s / s!, so every entry is a sum of
    positive terms added to the base value.
    """
    base = regularized_gamma_upper(order, y)
    if steps == 0:
        return np.array([base])
    i = np.arange(order, order + steps, dtype=float)
    increments = np.exp(-y + i * math.log(y) - ln_gamma(i + 1.0))
    ladder = np.empty(steps + 1)
    ladder[0] = base
    ladder[1:] = base + np.cumsum(increments)
    return np.minimum(ladder, 1.0)


def marcum_q_many(order: int, a: float, b_values: np.ndarray) -> np.ndarray:
    """
    Q_N(a, b) for one (N, a) and an array of thresholds b.

    The Poisson weights are computed once and shared by every threshold.

    Raises:
        DomainError: On a non-positive order, negative a or a negative or NaN b
    """
    order = require_positive_int(order, "order")
    require_nonnegative(a, "a")
    b_values = np.asarray(b_values, dtype=float)
    if not np.all(b_values >= 0):
        raise DomainError(f"Thresholds b must be >= 0, got {b_values!r}")
    pmf = _poisson_weights(0.5 * a * a)
    steps = len(pmf) - 1
    result = np.ones(b_values.shape)
    flat = result.reshape(-1)
    for idx, b in enumerate(b_values.reshape(-1)):
        if b == 0:
            continue
        if math.isinf(b):
            flat[idx] = 0.0
            continue
        ladder = _upper_gamma_ladder(order, 0.5 * b * b, steps)
        flat[idx] = min(max(float(np.dot(pmf, ladder)), 0.0), 1.0)
    return result


def marcum_q(order: int, a: float, b: float) -> float:
    """
    Generalized Marcum-Q function Q_N(a, b).

    Survival function of a noncentral chi-square variable with 2N degrees of
    freedom and noncentrality a², evaluated at b². Computed as a Poisson
    mixture of regularized upper incomplete gammas; the mixture is truncated
    once the omitted Poisson mass is below 1e-14.

    Args:
        order: Positive integer N
        a: Noncentrality parameter, a >= 0
        b: Threshold, b >= 0

    Returns:
        Probability in [0, 1]

    Raises:
        DomainError: On a non-positive order or negative a, b
    """
    if not (b >= 0):
        raise DomainError(f"b must be >= 0, got {b!r}")
    return float(marcum_q_many(order, a, np.array([b]))[0])
