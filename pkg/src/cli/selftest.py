"""Built-in invariant checks for the numerical kernels."""
import logging
import math
from typing import Callable, List, Tuple

import numpy as np
from scipy import integrate

from ..experiments.models import ExperimentResult
from ..specfun import (
    bessel_i_scaled_asymptotic,
    bessel_i_scaled_series,
    gauss_laguerre_rule,
    ln_gamma,
    marcum_q,
)
from ..specfun.bessel import SERIES_SWITCH_X
from ..theory import TheoryParams, noncentral_chi2_cdf, noncentral_chi2_pdf, p_c_exact, p_c_glq
from ..utils.constants import SELFTEST_COLUMNS

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]

GLQ_EXACT_TOL = 1e-3


def check_quadrature_moments() -> CheckResult:
    worst = 0.0
    for order in (5, 10, 30):
        for a in (0.0, 9.0, 19.0, 49.0):
            rule = gauss_laguerre_rule(order, a)
            log_nodes = np.log(rule.node_array)
            for k in range(2 * order):
                terms = rule.log_weight_array + k * log_nodes
                top = terms.max()
                log_moment = top + math.log(float(np.sum(np.exp(terms - top))))
                worst = max(worst, abs(math.expm1(log_moment - ln_gamma(a + k + 1.0))))
    return worst <= 1e-9, f"max relative moment error {worst:.3e}"


def check_weight_sums() -> CheckResult:
    worst = 0.0
    for order in (1, 2, 10, 50, 100):
        for a in (0.0, 9.0, 49.0):
            rule = gauss_laguerre_rule(order, a)
            target = math.exp(ln_gamma(a + 1.0))
            worst = max(worst, abs(sum(rule.weights) - target) / target)
    return worst <= 1e-9, f"max relative weight-sum error {worst:.3e}"


def check_marcum_central() -> CheckResult:
    b_values = np.round(np.arange(1, 51) * 0.1, 10)
    worst = max(abs(marcum_q(1, 0.0, b) - math.exp(-0.5 * b * b)) for b in b_values)
    return worst <= 1e-12, f"max |Q_1(0,b) - exp(-b^2/2)| = {worst:.3e}"


def check_marcum_cdf_complement() -> CheckResult:
    worst = 0.0
    for order in (1, 5, 10):
        for a in (0.0, 0.5, 1.0, 2.0, 4.0):
            for b in (0.5, 1.0, 2.0, 3.0, 5.0):
                total = marcum_q(order, a, b) + noncentral_chi2_cdf(2 * order, a * a, b * b)
                worst = max(worst, abs(total - 1.0))
    return worst <= 1e-10, f"max |Q + CDF - 1| = {worst:.3e}"


def check_marcum_telescoping() -> CheckResult:
    order, a, step = 10, 3.0, 0.5
    last = int(math.ceil(4.0 * (a * a + 2 * order + 10.0 * math.sqrt(2 * order)) / step))
    q = [marcum_q(order, a, math.sqrt(l * step)) for l in range(last + 2)]
    telescoped = sum(q[l] - q[l + 1] for l in range(last + 1))
    gap = abs(telescoped - (1.0 - q[last + 1]))
    ok = gap <= 1e-12 and q[last + 1] <= 1e-6
    return ok, f"telescoping gap {gap:.3e}, tail {q[last + 1]:.3e}"


def check_marcum_monotonicity() -> CheckResult:
    grid = np.linspace(0.0, 6.0, 10)
    table = np.array([[marcum_q(5, a, b) for b in grid] for a in grid])
    decreasing_in_b = bool(np.all(np.diff(table, axis=1) <= 1e-15))
    increasing_in_a = bool(np.all(np.diff(table, axis=0) >= -1e-15))
    return decreasing_in_b and increasing_in_a, f"nonincreasing in b: {decreasing_in_b}, nondecreasing in a: {increasing_in_a}"


def check_bessel_continuity() -> CheckResult:
    worst = 0.0
    for nu in (0.0, 0.5, 1.0, 2.5, 4.0):
        series = bessel_i_scaled_series(nu, SERIES_SWITCH_X)
        asymptotic = bessel_i_scaled_asymptotic(nu, SERIES_SWITCH_X)
        worst = max(worst, abs(series - asymptotic) / series)
    return worst <= 1e-10, f"max relative jump at x={SERIES_SWITCH_X} is {worst:.3e}"


def check_ncx2_normalization() -> CheckResult:
    total, _ = integrate.quad(lambda x: noncentral_chi2_pdf(20, 15.0, x), 0.0, np.inf, epsabs=1e-12, limit=200)
    return abs(total - 1.0) <= 1e-9, f"integral of density = {total!r}"


def check_glq_against_exact() -> CheckResult:
    params = TheoryParams.from_gamma(10, 0.5, 100)
    glq = p_c_glq(params)
    exact = p_c_exact(params)
    gap = abs(glq - exact)
    return gap <= GLQ_EXACT_TOL, f"N=10, gamma=0.5: glq={glq:.6f}, exact={exact:.6f}, gap={gap:.3e}"


CHECKS: List[Tuple[str, Callable[[], CheckResult]]] = [
    ('quadrature_moments', check_quadrature_moments),
    ('quadrature_weight_sums', check_weight_sums),
    ('marcum_central', check_marcum_central),
    ('marcum_cdf_complement', check_marcum_cdf_complement),
    ('marcum_telescoping', check_marcum_telescoping),
    ('marcum_monotonicity', check_marcum_monotonicity),
    ('bessel_continuity', check_bessel_continuity),
    ('ncx2_normalization', check_ncx2_normalization),
    ('glq_vs_exact', check_glq_against_exact),
]


def run_selftest(echo: Callable[[str], None] = print) -> ExperimentResult:
    """
    Run every check, echoing PASS/FAIL lines.

    A check that raises counts as a failure with the exception as detail.
    """
    rows = []
    for name, check in CHECKS:
        try:
            passed, detail = check()
        except Exception as e:
            logger.error(f"Self-test {name} raised: {e}")
            passed, detail = False, f"{type(e).__name__}: {e}"
        echo(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        rows.append({'check': name, 'passed': passed, 'detail': detail})
    failed = sum(not r['passed'] for r in rows)
    return ExperimentResult('selftest', SELFTEST_COLUMNS, rows, metadata={'failed': failed})
