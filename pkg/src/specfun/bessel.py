"""Modified Bessel function of the first kind for real order and argument."""
import logging
import math

import numpy as np

from ..core.exceptions import DomainError, NumericError
from .gamma import ln_gamma

logger = logging.getLogger(__name__)

# Below this argument the power series is summed directly
SERIES_SWITCH_X = 20.0

_MAX_SERIES_TERMS = 10_000
_REL_EPS = 1e-17


def _check_args(nu: float, x: float) -> None:
    if not (math.isfinite(nu) and nu >= 0):
        raise DomainError(f"Bessel order must be >= 0, got {nu!r}")
    if not (x >= 0):
        raise DomainError(f"Bessel argument must be >= 0, got {x!r}")


def bessel_i_scaled_series(nu: float, x: float) -> float:
    """e^{-x} Σ (x/2)^{2k+ν} / (k! Γ(k+ν+1)), summed term by term."""
    _check_args(nu, x)
    if x == 0:
        return 1.0 if nu == 0 else 0.0
    quarter_x2 = 0.25 * x * x
    ratio = 1.0
    total = 1.0
    for k in range(_MAX_SERIES_TERMS):
        ratio *= quarter_x2 / ((k + 1) * (k + 1 + nu))
        total += ratio
        if ratio < total * _REL_EPS:
            log_lead = nu * math.log(0.5 * x) - ln_gamma(nu + 1.0) - x
            return math.exp(log_lead) * total
    raise NumericError(f"Bessel power series did not converge for nu={nu}, x={x}")


def _scaled_log_series(nu: float, x: float) -> float:
    """Power series evaluated in log space; every term is positive so no cancellation."""
    peak = 0.5 * (-nu + math.sqrt(nu * nu + x * x))
    last = int(peak + 40.0 * math.sqrt(peak + nu + 1.0) + 60.0)
    k = np.arange(last + 1, dtype=float)
    log_terms = (
        (2.0 * k + nu) * math.log(0.5 * x)
        - ln_gamma(k + 1.0)
        - ln_gamma(k + nu + 1.0)
        - x
    )
    top = float(np.max(log_terms))
    return math.exp(top) * float(np.sum(np.exp(log_terms - top)))


def bessel_i_scaled_asymptotic(nu: float, x: float) -> float:
    """Large-argument asymptotic expansion of e^{-x} I_ν(x), truncated at its smallest term."""
    _check_args(nu, x)
    if x == 0:
        raise DomainError("The asymptotic expansion needs x > 0")
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    k = 1
    while True:
        step = -(mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        next_term = term * step
        if abs(next_term) >= abs(term) or next_term == 0.0:
            break
        total += next_term
        term = next_term
        if abs(term) < abs(total) * _REL_EPS:
            break
        k += 1
    return total / math.sqrt(2.0 * math.pi * x)


def bessel_i_scaled(nu: float, x: float) -> float:
    """
    Exponentially scaled modified Bessel function e^{-x} I_ν(x).

    Args:
        nu: Order, nu >= 0
        x: Argument, x >= 0

    Returns:
        e^{-x} I_ν(x); finite for arguments up to at least 1e6

    Raises:
        DomainError: For negative order or argument
    """
    _check_args(nu, x)
    if x == 0:
        return 1.0 if nu == 0 else 0.0
    if x < SERIES_SWITCH_X:
        return bessel_i_scaled_series(nu, x)
    if x >= nu * nu:
        return bessel_i_scaled_asymptotic(nu, x)
    logger.debug(f"Using log-space series for I_{nu}({x})")
    return _scaled_log_series(nu, x)


def bessel_i(nu: float, x: float) -> float:
    """
    Modified Bessel function of the first kind I_ν(x).

    Overflows to inf for x beyond about 700; use bessel_i_scaled there.
    """
    scaled = bessel_i_scaled(nu, x)
    if scaled == 0.0:
        return 0.0
    log_value = math.log(scaled) + x
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)
