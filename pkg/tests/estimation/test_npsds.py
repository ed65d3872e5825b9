"""Tests for NPSDS estimation and its error metrics."""
import numpy as np
import pytest
from pydantic import ValidationError

from src.core.exceptions import DomainError
from src.estimation import NpsdsEstimate, estimate_npsds, log_likelihood, mse, normalize
from src.signals import SpectrumSamples


class TestEstimateNpsds:
    """Test suite for estimate_npsds."""

    def test_sample_mean(self):
        """Test that the estimate is the arithmetic mean."""
        assert estimate_npsds([1.0, 2.0, 3.0, 6.0]) == 3.0

    def test_accepts_spectrum_samples(self):
        """Test that SpectrumSamples and plain arrays agree."""
        values = np.array([0.5, 1.5, 4.0])
        assert estimate_npsds(SpectrumSamples(values)) == estimate_npsds(values)

    def test_constant_input(self):
        """Test that c repeated 16 times estimates c exactly."""
        assert estimate_npsds(np.full(16, 0.1)) == 0.1

    def test_scale_equivariance(self, rng):
        """Test estimate(2^k S) = 2^k estimate(S) exactly."""
        values = rng.exponential(3.0, size=50)
        for factor in (0.25, 2.0, 1024.0):
            assert estimate_npsds(factor * values) == factor * estimate_npsds(values)

    def test_permutation_invariance(self, rng):
        """Test that reordering the samples does not change a single bit."""
        values = rng.exponential(1.0, size=101)
        assert estimate_npsds(values) == estimate_npsds(rng.permutation(values))
        assert estimate_npsds(values) == estimate_npsds(values[::-1])

    def test_empty_input(self):
        """Test that an empty spectrum raises DomainError."""
        with pytest.raises(DomainError):
            estimate_npsds([])

    def test_negative_input(self):
        """Test that a negative sample raises DomainError."""
        with pytest.raises(DomainError):
            estimate_npsds([1.0, -0.5])

    def test_maximizes_likelihood(self, rng):
        """Test that the sample mean is the maximizer of the exponential likelihood."""
        values = rng.exponential(2.0, size=30)
        theta_hat = estimate_npsds(values)
        best = log_likelihood(theta_hat, values)
        for factor in (0.5, 0.9, 0.99, 1.01, 1.1, 2.0):
            assert log_likelihood(factor * theta_hat, values) < best


class TestNormalize:
    """Test suite for normalize."""

    def test_normalized_value(self):
        """Test η = N/Θ and the scaled estimate."""
        est = normalize(2.0, 4.0, 10)
        assert isinstance(est, NpsdsEstimate)
        assert est.normalizer == 2.5
        assert est.normalized == 5.0
        assert est.raw == 2.0

    def test_invalid_reference(self):
        """Test that Θ <= 0 and N = 0 are rejected."""
        with pytest.raises(DomainError):
            normalize(1.0, 0.0, 10)
        with pytest.raises(DomainError):
            normalize(1.0, 1.0, 0)

    def test_frozen(self):
        """Test that the estimate is immutable."""
        est = normalize(1.0, 1.0, 1)
        with pytest.raises(ValidationError):
            est.raw = 3.0


class TestMse:
    """Test suite for mse."""

    def test_exact_estimates(self):
        """Test that perfect estimates give zero error."""
        assert mse([3.0, 3.0, 3.0], 3.0) == 0.0

    def test_known_value(self):
        """Test the mean of squared deviations."""
        assert mse([1.0, 3.0], 2.0) == 1.0

    def test_matches_variance_for_exponential_means(self, rng):
        """Test E[(Θ̂ - Θ)²] ≈ Θ²/N for the sample mean of N exponentials."""
        theta, n = 2.0, 20
        estimates = rng.exponential(theta, size=(20_000, n)).mean(axis=1)
        assert mse(estimates, theta) == pytest.approx(theta ** 2 / n, rel=0.05)

    def test_empty(self):
        """Test that no estimates raises DomainError."""
        with pytest.raises(DomainError):
            mse([], 1.0)
