"""Analytic key disagreement rate and its statistical model."""
from .distributions import gamma_pdf_shape_n, noncentral_chi2_cdf, noncentral_chi2_pdf
from .kdr import TheoryParams, kdr_theory, p_c_exact, p_c_glq, p_l_given_theta
from .sampler import sample_hierarchical

__all__ = [
    "TheoryParams",
    "gamma_pdf_shape_n",
    "kdr_theory",
    "noncentral_chi2_cdf",
    "noncentral_chi2_pdf",
    "p_c_exact",
    "p_c_glq",
    "p_l_given_theta",
    "sample_hierarchical",
]
