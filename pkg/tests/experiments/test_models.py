"""Tests for scenario, grid and result models and the sub-stream helpers."""
import pytest
from pydantic import ValidationError

from src.core.exceptions import DomainError
from src.experiments import ExperimentGrid, ExperimentResult, KdrCurvePoint, Scenario
from src.experiments.models import MAX_SEED
from src.experiments.seeding import chunk_bounds, duration_rng, hierarchical_rng
from src.signals import BackendType
from src.utils.constants import FIG6_COLUMNS


class TestScenario:
    """Test suite for Scenario."""

    def test_defaults(self):
        """Test the reference links, durations and backend."""
        scn = Scenario()
        assert scn.link_ab.doppler_shift == 200e6
        assert scn.link_ae.doppler_shift == 500e6
        assert scn.link_be.doppler_shift == 400e6
        assert scn.durations == 10_000
        assert scn.backend == BackendType.GENERATIVE

    def test_reverse_links(self):
        """Test that the reverse links negate the forward Doppler exactly."""
        scn = Scenario()
        links = scn.links()
        assert set(links) == {'ab', 'ba', 'ae', 'ea', 'be', 'eb'}
        assert links['ba'].doppler_shift == -links['ab'].doppler_shift
        assert links['ea'].doppler_shift == -links['ae'].doppler_shift
        assert links['eb'].doppler_shift == -links['be'].doppler_shift

    def test_with_pilot_length(self):
        """Test that only N changes."""
        scn = Scenario().with_pilot_length(50)
        assert scn.system.pilot_length == 50
        assert scn.link_ab.doppler_shift == 200e6

    def test_with_overrides_ignores_none(self):
        """Test that None leaves a field unchanged and values are validated."""
        scn = Scenario().with_overrides(seed=7, durations=None, backend="waveform")
        assert scn.seed == 7
        assert scn.durations == 10_000
        assert scn.backend == BackendType.WAVEFORM
        with pytest.raises(ValidationError):
            Scenario().with_overrides(durations=0)

    def test_seed_range(self):
        """Test that seeds outside [0, 2^64 - 1] are rejected."""
        assert Scenario(seed=MAX_SEED).seed == MAX_SEED
        with pytest.raises(ValidationError):
            Scenario(seed=MAX_SEED + 1)
        with pytest.raises(ValidationError):
            Scenario(seed=-1)

    def test_extra_field(self):
        """Test that unknown fields are rejected."""
        with pytest.raises(ValidationError):
            Scenario(link_xy=None)


class TestExperimentGrid:
    """Test suite for ExperimentGrid."""

    def test_defaults(self):
        """Test the default sweeps."""
        grid = ExperimentGrid()
        assert grid.n_values == (10, 20, 50)
        assert grid.n_range == (2, 5, 10, 20, 50)
        assert grid.gamma_grid[0] == 0.02

    def test_invalid_values(self):
        """Test that empty or non-positive sweeps are rejected."""
        with pytest.raises(ValidationError):
            ExperimentGrid(n_values=())
        with pytest.raises(ValidationError):
            ExperimentGrid(n_range=(0, 5))
        with pytest.raises(ValidationError):
            ExperimentGrid(gamma_grid=(0.1, -0.2))


class TestResults:
    """Test suite for result containers."""

    def test_curve_point_row(self):
        """Test that a curve point renders in FIG6 column order."""
        point = KdrCurvePoint(
            pilot_length=10, gamma=0.2, kdr_theory=0.9, kdr_sim=0.91,
            stderr=0.01, durations=100, quadrature_order=100,
        )
        row = point.to_row()
        assert tuple(row) == FIG6_COLUMNS
        assert row['N'] == 10
        assert row['M'] == 100

    def test_frame_column_order(self):
        """Test that to_frame keeps the declared columns even with no rows."""
        result = ExperimentResult('fig5', ('N', 'mse_ab'))
        frame = result.to_frame()
        assert list(frame.columns) == ['N', 'mse_ab']
        assert len(frame) == 0
        assert result.to_dict()['rows'] == []


class TestSeeding:
    """Test suite for sub-stream derivation."""

    def test_chunk_bounds(self):
        """Test consecutive half-open chunks covering the range."""
        assert chunk_bounds(5, 2) == [(0, 2), (2, 4), (4, 5)]
        assert chunk_bounds(3, 10) == [(0, 3)]

    def test_chunk_bounds_invalid(self):
        """Test that zero totals or sizes are rejected."""
        with pytest.raises(DomainError):
            chunk_bounds(0, 2)
        with pytest.raises(DomainError):
            chunk_bounds(5, 0)

    def test_streams_are_distinct(self):
        """Test that different keys give different streams and equal keys equal ones."""
        first = duration_rng(1, 10, 0, 1).random(4)
        assert (first == duration_rng(1, 10, 0, 1).random(4)).all()
        assert not (first == duration_rng(1, 10, 0, 2).random(4)).all()
        assert not (first == duration_rng(1, 10, 1, 1).random(4)).all()
        assert not (hierarchical_rng(1, 10, 0).random(4) == hierarchical_rng(1, 10, 1).random(4)).all()
