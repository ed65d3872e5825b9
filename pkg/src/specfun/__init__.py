"""Special-function kernel: gamma, Bessel, Marcum-Q and Gauss-Laguerre quadrature."""
from .bessel import bessel_i, bessel_i_scaled, bessel_i_scaled_asymptotic, bessel_i_scaled_series
from .gamma import ln_gamma, regularized_gamma_lower, regularized_gamma_upper
from .marcum import marcum_q, marcum_q_many, poisson_upper_tail
from .quadrature import QuadratureRule, gauss_laguerre_rule, laguerre

__all__ = [
    "QuadratureRule",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_i_scaled_asymptotic",
    "bessel_i_scaled_series",
    "gauss_laguerre_rule",
    "laguerre",
    "ln_gamma",
    "marcum_q",
    "marcum_q_many",
    "poisson_upper_tail",
    "regularized_gamma_lower",
    "regularized_gamma_upper",
]
