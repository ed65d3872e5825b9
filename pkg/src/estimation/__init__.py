"""NPSDS estimation from power-spectrum observations."""
from .npsds import NpsdsEstimate, estimate_npsds, log_likelihood, mse, normalize

__all__ = ["NpsdsEstimate", "estimate_npsds", "log_likelihood", "mse", "normalize"]
