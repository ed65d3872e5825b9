"""Densities and distribution functions of the estimate model."""
import logging
import math
from typing import Union

import numpy as np

from ..core.exceptions import DomainError, NumericError
from ..specfun import bessel_i_scaled, ln_gamma, poisson_upper_tail, regularized_gamma_lower
from ..specfun.marcum import POISSON_TAIL_TOL
from ..utils.validators import require_nonnegative, require_positive_int

logger = logging.getLogger(__name__)

_MAX_POISSON_TERMS = 100_000


def _check_dof(dof: int) -> int:
    dof = require_positive_int(dof, "dof")
    if dof < 2:
        raise DomainError(f"Degrees of freedom must be >= 2, got {dof}")
    return dof


def noncentral_chi2_pdf(dof: int, lam: float, x: float) -> float:
    """
    Noncentral chi-square density with `dof` degrees of freedom and noncentrality λ.

    f(x) = ½ e^{-(x+λ)/2} (x/λ)^{k/4-1/2} I_{k/2-1}(√(λx)), evaluated with the
    exponentially scaled Bessel function so large arguments do not overflow.
    """
    dof = _check_dof(dof)
    require_nonnegative(lam, "lam")
    require_nonnegative(x, "x")
    half_k = 0.5 * dof
    if x == 0:
        return 0.5 * math.exp(-0.5 * lam) if dof == 2 else 0.0
    if lam == 0:
        return math.exp((half_k - 1.0) * math.log(x) - 0.5 * x - half_k * math.log(2.0) - ln_gamma(half_k))
    root = math.sqrt(lam * x)
    scaled = bessel_i_scaled(half_k - 1.0, root)
    if scaled == 0.0:
        return 0.0
    log_density = (
        math.log(0.5)
        - 0.5 * (x + lam)
        + root
        + (0.25 * dof - 0.5) * math.log(x / lam)
        + math.log(scaled)
    )
    return math.exp(log_density)


def noncentral_chi2_cdf(dof: int, lam: float, x: float) -> float:
    """
    Noncentral chi-square distribution function.

    Poisson(λ/2) mixture of central chi-square CDFs P(k/2 + j, x/2), summed
    until the remaining Poisson mass is below 1e-14.
    """
    dof = _check_dof(dof)
    require_nonnegative(lam, "lam")
    require_nonnegative(x, "x")
    if x == 0:
        return 0.0
    half_lam = 0.5 * lam
    total = 0.0
    for j in range(_MAX_POISSON_TERMS):
        if half_lam == 0:
            weight = 1.0 if j == 0 else 0.0
        else:
            weight = math.exp(j * math.log(half_lam) - half_lam - ln_gamma(j + 1.0))
        total += weight * regularized_gamma_lower(0.5 * dof + j, 0.5 * x)
        if j >= half_lam and poisson_upper_tail(j, half_lam) <= POISSON_TAIL_TOL:
            return min(max(total, 0.0), 1.0)
    raise NumericError(f"Noncentral chi-square CDF series did not converge for lam={lam}")


def gamma_pdf_shape_n(x: Union[float, np.ndarray], pilot_length: int) -> Union[float, np.ndarray]:
    """Gamma(shape N, scale 1) density x^{N-1} e^{-x} / Γ(N)."""
    pilot_length = require_positive_int(pilot_length, "pilot_length")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError(f"Gamma density requires x >= 0, got {x!r}")
    with np.errstate(divide="ignore"):
        log_x = np.log(arr)
    if pilot_length == 1:
        value = np.exp(-arr)
    else:
        value = np.where(arr > 0, np.exp((pilot_length - 1) * log_x - arr - ln_gamma(pilot_length)), 0.0)
    if value.ndim == 0:
        return float(value)
    return value
