"""Analytic key-match probability and key disagreement rate."""
import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate

from ..core.exceptions import NumericError
from ..keygen.quantizer import quantize_many
from ..specfun import gauss_laguerre_rule, ln_gamma, marcum_q_many, regularized_gamma_lower, regularized_gamma_upper
from ..utils.validators import require_nonnegative, require_nonnegative_int
from .distributions import gamma_pdf_shape_n

logger = logging.getLogger(__name__)

# Gamma(N, 1) mass ignored on each side of the integration range
SUPPORT_TAIL = 1e-13
QUAD_EPSABS = 1e-12
QUAD_EPSREL = 1e-10
QUAD_LIMIT = 200
MAX_ABS_ERROR = 1e-8
# Beyond this many cells the same-cell probability is integrated in one pass
MAX_CELLS = 5000


class TheoryParams(BaseModel):
    """Parameters of the analytic KDR model."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    pilot_length: int = Field(..., ge=1, description="N")
    step: float = Field(..., gt=0, description="Quantization step Δ")
    quadrature_order: int = Field(100, ge=1, description="Gauss-Laguerre order M")

    @property
    def dof(self) -> int:
        return 2 * self.pilot_length

    @property
    def laguerre_exponent(self) -> float:
        return float(self.pilot_length - 1)

    @property
    def gamma(self) -> float:
        """Normalized step γ = Δ/N."""
        return self.step / self.pilot_length

    @classmethod
    def from_gamma(cls, pilot_length: int, gamma: float, quadrature_order: int = 100) -> "TheoryParams":
        return cls(pilot_length=pilot_length, step=gamma * pilot_length, quadrature_order=quadrature_order)


def p_l_given_theta(theta_normalized: float, cell: int, params: TheoryParams) -> float:
    """
    Probability that the other node's normalized estimate falls in cell l.

    P_l = Q_N(√Θ̃, √(lΔ)) - Q_N(√Θ̃, √((l+1)Δ)), the mass of [lΔ, (l+1)Δ) under
    the noncentral chi-square law with 2N degrees of freedom and noncentrality Θ̃.
    """
    require_nonnegative(theta_normalized, "theta_normalized")
    cell = require_nonnegative_int(cell, "cell")
    edges = np.sqrt(np.array([cell, cell + 1], dtype=float) * params.step)
    upper, lower = marcum_q_many(params.pilot_length, math.sqrt(theta_normalized), edges)
    return max(float(upper - lower), 0.0)


def _gamma_quantile(shape: int, tail: float, upper: bool) -> float:
    """Bisection for the point leaving `tail` Gamma(shape, 1) mass below (or above) it."""
    def below_target(x: float) -> bool:
        if upper:
            return regularized_gamma_upper(shape, x) > tail
        return regularized_gamma_lower(shape, x) < tail

    lo, hi = 0.0, float(shape) + 1.0
    while below_target(hi):
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if below_target(mid):
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    return 0.5 * (lo + hi)


def _same_cell_integrand(theta: float, params: TheoryParams) -> float:
    cell = int(math.floor(theta / params.step))
    return gamma_pdf_shape_n(theta, params.pilot_length) * p_l_given_theta(theta, cell, params)


def p_c_exact(params: TheoryParams) -> float:
    """
    Key-match probability by adaptive integration over Θ̃_ab ~ Gamma(N, 1).

    The range is cut at every quantization boundary lΔ and each cell is
    integrated with scipy.integrate.quad, so the integrand is smooth on every
    piece. Ranges beyond the 1e-13 Gamma tails are dropped.

    Raises:
        NumericError: If the accumulated error estimate exceeds 1e-8
    """
    n = params.pilot_length
    step = params.step
    lo = _gamma_quantile(n, SUPPORT_TAIL, upper=False)
    hi = _gamma_quantile(n, SUPPORT_TAIL, upper=True)
    first_cell = int(math.floor(lo / step))
    last_cell = int(math.floor(hi / step))

    if last_cell - first_cell + 1 > MAX_CELLS:
        logger.debug(f"{last_cell - first_cell + 1} cells for N={n}, step={step}; integrating in one pass")
        value, abserr = integrate.quad(
            _same_cell_integrand, lo, hi, args=(params,),
            epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT,
        )
        total, total_err = value, abserr
    else:
        total = 0.0
        total_err = 0.0
        for cell in range(first_cell, last_cell + 1):
            left = max(cell * step, lo)
            right = min((cell + 1) * step, hi)
            if right <= left:
                continue
            value, abserr = integrate.quad(
                lambda theta: gamma_pdf_shape_n(theta, n) * p_l_given_theta(theta, cell, params),
                left, right,
                epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT,
            )
            total += value
            total_err += abserr

    if total_err > MAX_ABS_ERROR:
        raise NumericError(
            f"Same-cell probability integration for N={n}, step={step} reports "
            f"error {total_err:.3e} (value {total!r})"
        )
    return min(max(total, 0.0), 1.0)


def p_c_glq(params: TheoryParams) -> float:
    """
    Gauss-Laguerre approximation of the key-match probability.

    With nodes ψ_m and weights w_m of the order-M rule for x^{N-1} e^{-x},
    P̃_c = Σ_m w_m P_{l_m}(ψ_m) / Γ(N) where l_m = floor(ψ_m/Δ).
    """
    rule = gauss_laguerre_rule(params.quadrature_order, params.laguerre_exponent)
    nodes = rule.node_array
    cells = quantize_many(nodes, params.step)
    weights = np.exp(rule.log_weight_array - ln_gamma(params.pilot_length))
    masses = np.array([p_l_given_theta(psi, int(cell), params) for psi, cell in zip(nodes, cells)])
    return min(max(float(np.dot(weights, masses)), 0.0), 1.0)


def kdr_theory(params: TheoryParams) -> float:
    """Analytic key disagreement rate 1 - P̃_c."""
    return 1.0 - p_c_glq(params)
