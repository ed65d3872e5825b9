"""Tests for pilot synthesis, the link model and spectrum observations."""
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import stats

from src.core.exceptions import DomainError, UsageError
from src.estimation import estimate_npsds
from src.signals import (
    BackendType,
    ComplexSequence,
    GenerativeBackend,
    LinkConfig,
    SpectrumSamples,
    SystemConfig,
    WaveformBackend,
    apply_link,
    draw_spectrum_generative,
    generate_pilots,
    get_backend,
    nominal_psd_bpsk,
    power_spectrum,
    sub_bin_offset,
    theoretical_npsds,
)
from src.utils.constants import SPEED_OF_LIGHT


class TestModels:
    """Test suite for SystemConfig and LinkConfig."""

    def test_defaults(self, table1_system):
        """Test the reference parameter set."""
        assert table1_system.carrier_freq == 1e9
        assert table1_system.symbol_energy == 10.0
        assert table1_system.noise_variance == pytest.approx(10 ** 0.1)
        assert table1_system.path_loss_exponent == 2.0
        assert table1_system.delta_f == pytest.approx(9.0 / 10.0)

    def test_invalid_system(self):
        """Test that non-positive period and negative noise are rejected."""
        with pytest.raises(ValidationError):
            SystemConfig(symbol_period=0.0)
        with pytest.raises(ValidationError):
            SystemConfig(noise_variance=-1.0)
        with pytest.raises(ValidationError):
            SystemConfig(pilot_length=0)

    def test_reciprocal_link_is_exact(self):
        """Test that the reverse direction negates the Doppler shift exactly."""
        link = LinkConfig.from_relative_velocity(7_500.0, 1e9, distance=3.0)
        reverse = link.reciprocal()
        assert reverse.doppler_shift == -link.doppler_shift
        assert reverse.distance == link.distance
        assert link.doppler_shift == pytest.approx(7_500.0 * 1e9 / SPEED_OF_LIGHT)

    def test_gain(self):
        """Test ζ = d^{-PL} and ζ = 1 at unit distance."""
        assert LinkConfig(doppler_shift=0.0).gain(2.0) == 1.0
        assert LinkConfig(doppler_shift=0.0, distance=2.0).gain(2.0) == 0.25

    def test_spectrum_samples_reject_negative(self):
        """Test that negative power samples are rejected."""
        with pytest.raises(DomainError):
            SpectrumSamples(np.array([1.0, -0.1]))


class TestWaveform:
    """Test suite for the time-domain chain."""

    def test_pilot_alphabet(self):
        """Test that BPSK pilots are ±√Es."""
        cfg = SystemConfig(pilot_length=4, symbol_energy=1.0)
        pilots = generate_pilots(cfg, np.random.default_rng(1))
        assert len(pilots) == 4
        assert set(np.real(pilots.samples)).issubset({1.0, -1.0})
        assert np.all(np.imag(pilots.samples) == 0)

    def test_pilot_constant_modulus(self, table1_system):
        """Test that the burst energy is N·Es."""
        pilots = generate_pilots(table1_system, np.random.default_rng(2))
        assert pilots.energy() / len(pilots) == pytest.approx(table1_system.symbol_energy, rel=1e-14)

    def test_pilot_determinism(self, table1_system):
        """Test that the same seed gives the same burst."""
        a = generate_pilots(table1_system, np.random.default_rng(3))
        b = generate_pilots(table1_system, np.random.default_rng(3))
        np.testing.assert_array_equal(a.samples, b.samples)

    def test_identity_channel(self):
        """Test y = x for σ² = 0, ω = 0, d = 1."""
        cfg = SystemConfig(noise_variance=0.0)
        x = generate_pilots(cfg, np.random.default_rng(4))
        y = apply_link(x, LinkConfig(doppler_shift=0.0), cfg, np.random.default_rng(5))
        np.testing.assert_array_equal(y.samples, x.samples)

    def test_doppler_is_unimodular(self):
        """Test |y(i)| = ζ|x(i)| without noise."""
        cfg = SystemConfig(noise_variance=0.0, pilot_length=32)
        x = generate_pilots(cfg, np.random.default_rng(6))
        link = LinkConfig(doppler_shift=123.456, distance=2.0)
        y = apply_link(x, link, cfg, np.random.default_rng(7))
        np.testing.assert_allclose(np.abs(y.samples), 0.25 * np.abs(x.samples), rtol=1e-13)

    def test_noise_variance(self):
        """Test that the noise generator has variance σ² = 1."""
        cfg = SystemConfig(noise_variance=1.0, pilot_length=100_000)
        zeros = ComplexSequence(np.zeros(cfg.pilot_length))
        y = apply_link(zeros, LinkConfig(doppler_shift=0.0), cfg, np.random.default_rng(8))
        assert np.mean(np.abs(y.samples) ** 2) == pytest.approx(1.0, rel=0.05)

    def test_length_mismatch(self, table1_system):
        """Test that a burst of the wrong length is rejected."""
        with pytest.raises(DomainError):
            apply_link(ComplexSequence(np.ones(3)), LinkConfig(doppler_shift=0.0), table1_system, np.random.default_rng(0))

    def test_dc_spectrum(self):
        """Test that a constant burst puts all power in bin 0."""
        spectrum = power_spectrum(ComplexSequence(np.full(8, 2.0 + 0j)))
        assert spectrum.values[0] == pytest.approx(8 * 4.0, rel=1e-14)
        np.testing.assert_allclose(spectrum.values[1:], 0.0, atol=1e-24)

    def test_impulse_spectrum(self):
        """Test that a unit impulse has a flat spectrum 1/N."""
        impulse = np.zeros(16, dtype=complex)
        impulse[0] = 1.0
        spectrum = power_spectrum(ComplexSequence(impulse))
        np.testing.assert_allclose(spectrum.values, 1.0 / 16, rtol=1e-14)

    def test_parseval(self, rng):
        """Test Σ S(i) = Σ |y(i)|² for random bursts."""
        for n in (1, 7, 64):
            y = ComplexSequence(rng.normal(size=n) + 1j * rng.normal(size=n))
            assert power_spectrum(y).total_power() == pytest.approx(y.energy(), rel=1e-12)

    def test_round_trip_estimate(self):
        """Test that the noiseless identity channel reproduces Θ̂ = Es."""
        cfg = SystemConfig(noise_variance=0.0, pilot_length=16)
        backend = WaveformBackend(cfg)
        pilots = backend.transmit(np.random.default_rng(9))
        spectrum = backend.observe(pilots, LinkConfig(doppler_shift=0.0), np.random.default_rng(10))
        assert estimate_npsds(spectrum) == pytest.approx(cfg.symbol_energy, rel=1e-12)

    def test_total_power_is_doppler_invariant(self):
        """Test that ΣS is the same for ω, -ω and 0 without noise."""
        cfg = SystemConfig(noise_variance=0.0, pilot_length=20)
        x = generate_pilots(cfg, np.random.default_rng(11))
        powers = [
            power_spectrum(apply_link(x, LinkConfig(doppler_shift=w), cfg, np.random.default_rng(0))).total_power()
            for w in (200e6, -200e6, 0.0)
        ]
        assert powers[0] == pytest.approx(powers[2], rel=1e-12)
        assert powers[1] == pytest.approx(powers[2], rel=1e-12)


class TestSpectralModel:
    """Test suite for the nominal PSD and NPSDS model."""

    def test_psd_at_zero_and_first_null(self, table1_system):
        """Test A^x(0) = Es·T and A^x(1/T) = 0."""
        t = table1_system.symbol_period
        assert nominal_psd_bpsk(0.0, table1_system) == pytest.approx(table1_system.symbol_energy * t)
        assert nominal_psd_bpsk(1.0 / t, table1_system) == pytest.approx(0.0, abs=1e-30)

    def test_psd_is_even(self, table1_system):
        """Test A^x(f) = A^x(-f) on a grid."""
        f = np.linspace(0, 40, 101)
        np.testing.assert_allclose(nominal_psd_bpsk(f, table1_system), nominal_psd_bpsk(-f, table1_system), rtol=1e-15)

    def test_offset_fold(self):
        """Test that offsets are folded into [-Δf/2, Δf/2] and odd in ω."""
        assert sub_bin_offset(2.0, 0.9) == pytest.approx(0.2)
        assert sub_bin_offset(0.8, 0.9) == pytest.approx(-0.1)
        assert sub_bin_offset(-0.8, 0.9) == -sub_bin_offset(0.8, 0.9)

    def test_integer_bin_offset(self, table1_system):
        """Test Θ = Es·T + σ² when ω is a multiple of Δf."""
        link = LinkConfig(doppler_shift=27.0)
        expected = table1_system.symbol_energy * table1_system.symbol_period + table1_system.noise_variance
        assert theoretical_npsds(link, table1_system) == pytest.approx(expected, rel=1e-9)

    @pytest.mark.parametrize("omega", [200e6, 500e6, 400e6, 1.2345, 987654.321])
    def test_reciprocity(self, table1_system, omega):
        """Test Θ(ω) = Θ(-ω) bit for bit."""
        link = LinkConfig(doppler_shift=omega, distance=1.3)
        assert theoretical_npsds(link, table1_system) == theoretical_npsds(link.reciprocal(), table1_system)

    def test_eve_link_differs(self, table1_system):
        """Test Θ_ae ≠ Θ_ab for the reference Doppler shifts."""
        theta_ab = theoretical_npsds(LinkConfig(doppler_shift=200e6), table1_system)
        theta_ae = theoretical_npsds(LinkConfig(doppler_shift=500e6), table1_system)
        assert theta_ab != theta_ae

    def test_generative_mean(self):
        """Test that exponential draws average to Θ."""
        cfg = SystemConfig(pilot_length=1_000_000)
        spectrum = draw_spectrum_generative(5.0, cfg, np.random.default_rng(12))
        assert abs(spectrum.values.mean() - 5.0) <= 5 * 5.0 / math.sqrt(1e6)
        assert np.all(spectrum.values >= 0)

    def test_generative_determinism(self, table1_system):
        """Test that the same seed gives the same samples."""
        a = draw_spectrum_generative(2.0, table1_system, np.random.default_rng(13))
        b = draw_spectrum_generative(2.0, table1_system, np.random.default_rng(13))
        np.testing.assert_array_equal(a.values, b.values)

    def test_generative_rejects_nonpositive_theta(self, table1_system):
        """Test that Θ <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            draw_spectrum_generative(0.0, table1_system, np.random.default_rng(0))

    @pytest.mark.parametrize("n", [10, 20, 50])
    def test_normalized_estimate_is_gamma(self, n):
        """Test that N·Θ̂/Θ follows Gamma(N, 1) under the generative backend."""
        cfg = SystemConfig(pilot_length=n)
        backend = GenerativeBackend(cfg)
        link = LinkConfig(doppler_shift=200e6)
        theta = theoretical_npsds(link, cfg)
        rng = np.random.default_rng(1000 + n)
        normalized = np.array([
            n * estimate_npsds(backend.observe(None, link, rng)) / theta for _ in range(10_000)
        ])
        assert stats.kstest(normalized, stats.gamma(a=n).cdf).pvalue > 0.01


class TestBackends:
    """Test suite for backend selection."""

    def test_factory(self, table1_system):
        """Test that both names resolve to their classes."""
        assert isinstance(get_backend("waveform", table1_system), WaveformBackend)
        assert isinstance(get_backend(BackendType.GENERATIVE, table1_system), GenerativeBackend)

    def test_unknown_backend(self, table1_system):
        """Test that an unknown name raises UsageError."""
        with pytest.raises(UsageError):
            get_backend("optical", table1_system)

    def test_waveform_needs_pilots(self, table1_system):
        """Test that observing without pilots is a usage error."""
        with pytest.raises(UsageError):
            WaveformBackend(table1_system).observe(None, LinkConfig(doppler_shift=0.0), np.random.default_rng(0))
