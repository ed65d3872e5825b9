"""Generalized Laguerre polynomials and Gauss-Laguerre quadrature rules."""
import logging
import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import eigvalsh_tridiagonal

from ..core.cache import rule_cache
from ..core.exceptions import NumericError
from ..utils.validators import require_nonnegative, require_nonnegative_int, require_positive_int
from .gamma import ln_gamma

logger = logging.getLogger(__name__)

NEWTON_MAX_ITER = 100
NEWTON_REL_TOL = 1e-12
# Rounding noise of the recurrence can keep the last step just above NEWTON_REL_TOL
NEWTON_ACCEPT_TOL = 1e-9
WEIGHT_SUM_REL_TOL = 1e-9

# Above this order the moment exactness is no longer guaranteed to 1e-9
EXACT_ORDER_LIMIT = 30

_RESCALE = 1e100
_LOG_RESCALE = math.log(_RESCALE)


class QuadratureRule(BaseModel):
    """Nodes and weights for ∫₀^∞ x^a e^{-x} f(x) dx ≈ Σ w_m f(ψ_m)."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=1)
    exponent: float = Field(..., ge=0)
    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]
    log_weights: Tuple[float, ...]

    @property
    def node_array(self) -> np.ndarray:
        return np.asarray(self.nodes)

    @property
    def log_weight_array(self) -> np.ndarray:
        return np.asarray(self.log_weights)

    def integrate(self, func) -> float:
        """Apply the rule to a vectorized integrand f."""
        values = np.asarray(func(self.node_array), dtype=float)
        return float(np.dot(np.asarray(self.weights), values))


def laguerre(degree: int, a: float, x: float) -> float:
    """
    Generalized Laguerre polynomial L_M^{(a)}(x) by the three-term recurrence.

    L_0 = 1, L_1 = 1 + a - x,
    (k + 1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}.
    """
    degree = require_nonnegative_int(degree, "degree")
    prev = 1.0
    if degree == 0:
        return prev
    current = 1.0 + a - x
    for k in range(1, degree):
        prev, current = current, ((2 * k + 1 + a - x) * current - (k + a) * prev) / (k + 1)
    return current


def _initial_nodes(order: int, a: float) -> np.ndarray:
    """Eigenvalues of the Jacobi matrix of the monic generalized Laguerre recurrence."""
    if order == 1:
        return np.array([a + 1.0])
    k = np.arange(order, dtype=float)
    diagonal = 2.0 * k + a + 1.0
    off_diagonal = np.sqrt(k[1:] * (k[1:] + a))
    return np.sort(eigvalsh_tridiagonal(diagonal, off_diagonal))


def _scaled_recurrence(order: int, a: float, z: np.ndarray):
    """
    Evaluate L_n and L_{n-1} at every z, rescaling on overflow.

    Returns (p1, p2, log_scale) with L_n(z) = p1·e^{log_scale} and
    L_{n-1}(z) = p2·e^{log_scale}.
    """
    p1 = np.ones_like(z)
    p2 = np.zeros_like(z)
    log_scale = np.zeros_like(z)
    for j in range(1, order + 1):
        p3 = p2
        p2 = p1
        p1 = ((2 * j - 1 + a - z) * p2 - (j - 1 + a) * p3) / j
        big = np.abs(p1) > _RESCALE
        if np.any(big):
            p1 = np.where(big, p1 / _RESCALE, p1)
            p2 = np.where(big, p2 / _RESCALE, p2)
            log_scale = np.where(big, log_scale + _LOG_RESCALE, log_scale)
    return p1, p2, log_scale


def _build_rule(order: int, a: float) -> QuadratureRule:
    z = _initial_nodes(order, a)
    converged = False
    last_step = np.inf
    for iteration in range(1, NEWTON_MAX_ITER + 1):
        p1, p2, log_scale = _scaled_recurrence(order, a, z)
        pp = (order * p1 - (order + a) * p2) / z
        step = p1 / pp
        z = z - step
        last_step = float(np.max(np.abs(step) / np.abs(z)))
        if last_step <= NEWTON_REL_TOL:
            converged = True
            break
    if not converged and last_step <= NEWTON_ACCEPT_TOL:
        logger.debug(
            f"Gauss-Laguerre nodes for order={order}, exponent={a} stalled at relative step {last_step:.3e}"
        )
        converged = True
    if not converged:
        raise NumericError(
            f"Gauss-Laguerre node refinement did not converge for order={order}, "
            f"exponent={a} after {NEWTON_MAX_ITER} iterations (last relative step {last_step:.3e})"
        )

    # Derivative and L_{n-1} at the polished nodes
    p1, p2, log_scale = _scaled_recurrence(order, a, z)
    pp = (order * p1 - (order + a) * p2) / z
    product = -pp * p2
    if np.any(product <= 0):
        raise NumericError(
            f"Gauss-Laguerre weights are not positive for order={order}, exponent={a}"
        )
    log_weights = (
        ln_gamma(order + a) - ln_gamma(order) - math.log(order)
        - np.log(product) - 2.0 * log_scale
    )
    weights = np.exp(log_weights)

    if np.any(z <= 0) or np.any(np.diff(z) <= 0):
        raise NumericError(
            f"Gauss-Laguerre nodes are not positive and strictly increasing for "
            f"order={order}, exponent={a}"
        )
    if not np.all(np.isfinite(log_weights)):
        raise NumericError(f"Non-finite Gauss-Laguerre weight for order={order}, exponent={a}")

    target = math.exp(ln_gamma(a + 1.0))
    weight_sum = float(np.sum(weights))
    rel_error = abs(weight_sum - target) / target
    if rel_error > WEIGHT_SUM_REL_TOL:
        raise NumericError(
            f"Gauss-Laguerre weights sum to {weight_sum!r} instead of Γ(a+1)={target!r} "
            f"(relative error {rel_error:.3e}) for order={order}, exponent={a}"
        )
    if order > EXACT_ORDER_LIMIT:
        logger.debug(
            f"Gauss-Laguerre rule of order {order} built; high-degree moment exactness "
            f"degrades above order {EXACT_ORDER_LIMIT}"
        )

    return QuadratureRule(
        order=order,
        exponent=a,
        nodes=tuple(z.tolist()),
        weights=tuple(weights.tolist()),
        log_weights=tuple(log_weights.tolist()),
    )


def gauss_laguerre_rule(order: int, a: float) -> QuadratureRule:
    """
    Generalized Gauss-Laguerre rule of the given order for the weight x^a e^{-x}.

    Nodes are the roots of L_M^{(a)}; weights are
    w_m = -Γ(M+a) / (Γ(M) · M · L_M'(ψ_m) · L_{M-1}(ψ_m)), evaluated in log
    space. Rules are memoized per (order, exponent).

    Args:
        order: Number of nodes M >= 1
        a: Exponent of the weight function, a >= 0

    Returns:
        Immutable QuadratureRule

    Raises:
        NumericError: If node refinement fails or the rule fails validation
    """
    order = require_positive_int(order, "order")
    a = float(require_nonnegative(a, "a"))
    return rule_cache.get_or_create((order, a), lambda: _build_rule(order, a))
