"""Pytest configuration and shared fixtures."""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.cache import rule_cache
from src.experiments.models import Scenario
from src.signals.models import LinkConfig, SystemConfig


@pytest.fixture
def table1_system():
    """System parameters of the reference simulation (N = 10)."""
    return SystemConfig()


@pytest.fixture
def make_scenario():
    """Factory for scenarios with Table I Dopplers and overridable fields."""

    def factory(
        pilot_length: int = 10,
        durations: int = 2000,
        seed: int = 12345,
        backend: str = "generative",
        eve_distance: float = 1.0,
        **system_updates,
    ) -> Scenario:
        system = SystemConfig(pilot_length=pilot_length, **system_updates)
        return Scenario(
            system=system,
            link_ab=LinkConfig(doppler_shift=200e6),
            link_ae=LinkConfig(doppler_shift=500e6, distance=eve_distance),
            link_be=LinkConfig(doppler_shift=400e6, distance=eve_distance),
            durations=durations,
            seed=seed,
            backend=backend,
        )

    return factory


@pytest.fixture
def rng():
    """Seeded generator for tests that need their own randomness."""
    return np.random.default_rng(20240917)


@pytest.fixture
def fresh_rule_cache():
    """Empty the quadrature-rule cache before and after a test."""
    rule_cache.clear()
    yield rule_cache
    rule_cache.clear()
