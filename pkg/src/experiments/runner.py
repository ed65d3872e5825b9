"""Monte Carlo experiment orchestration for the Alice/Bob/Eve scenario."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import stats

from ..config import config
from ..estimation import estimate_npsds, mse
from ..keygen import KeyIndex, empirical_kdr, export_key_hex, quantize, quantize_many
from ..signals import BackendType, ObservationBackend, get_backend, theoretical_npsds
from ..theory import TheoryParams, kdr_theory, sample_hierarchical
from ..utils.constants import (
    FIG5_COLUMNS,
    KEYRATES_COLUMNS,
    LINK_AB,
    LINK_AE,
    LINK_BA,
    LINK_BE,
    LINK_STREAM_IDS,
    NODE_ALICE,
    NODE_BOB,
    PILOT_STREAM_IDS,
    RECEIVER_ALICE,
    RECEIVER_BOB,
    RECEIVER_EVE_FROM_A,
    RECEIVER_EVE_FROM_B,
    RECEIVERS,
    SINGLE_RUN_COLUMNS,
)
from ..utils.validators import require_nonempty, require_nonnegative_int, require_positive
from .models import DurationRecord, ExperimentResult, Fig4Result, Fig6Result, KdrCurvePoint, Scenario
from .seeding import chunk_bounds, duration_rng, hierarchical_rng

logger = logging.getLogger(__name__)

# Column order of the per-duration estimate matrix
ESTIMATE_ORDER = (RECEIVER_ALICE, RECEIVER_BOB, RECEIVER_EVE_FROM_A, RECEIVER_EVE_FROM_B)

# Pairs compared by the KS test of the histogram experiment
KS_PAIRS = (
    (RECEIVER_ALICE, RECEIVER_BOB),
    (RECEIVER_BOB, RECEIVER_EVE_FROM_A),
    (RECEIVER_BOB, RECEIVER_EVE_FROM_B),
)


def observe_duration(scn: Scenario, backend: ObservationBackend, duration_index: int) -> Dict[str, float]:
    """
    One TDD round: Alice and Bob each send a pilot burst.

    Bob (link ab) and Eve (link ae) observe Alice's burst; Alice (link ba) and
    Eve (link be) observe Bob's. Each transmitter's pilots come from one
    stream, so both of its receivers see the same burst.
    """
    n = scn.system.pilot_length

    def rng(stream_id: int) -> np.random.Generator:
        return duration_rng(scn.seed, n, duration_index, stream_id)

    pilots_a = backend.transmit(rng(PILOT_STREAM_IDS[NODE_ALICE]))
    pilots_b = backend.transmit(rng(PILOT_STREAM_IDS[NODE_BOB]))

    def estimate(pilots, link_label: str, link) -> float:
        return estimate_npsds(backend.observe(pilots, link, rng(LINK_STREAM_IDS[link_label])))

    return {
        RECEIVER_BOB: estimate(pilots_a, LINK_AB, scn.link_ab),
        RECEIVER_EVE_FROM_A: estimate(pilots_a, LINK_AE, scn.link_ae),
        RECEIVER_ALICE: estimate(pilots_b, LINK_BA, scn.link_ba),
        RECEIVER_EVE_FROM_B: estimate(pilots_b, LINK_BE, scn.link_be),
    }


def run_key_duration(scn: Scenario, duration_index: int, delta: float) -> DurationRecord:
    """
    Estimates and key indices of every receiver for one key duration.

    Deterministic in (scn.seed, N, duration_index).
    """
    duration_index = require_nonnegative_int(duration_index, "duration_index")
    require_positive(delta, "delta")
    backend = get_backend(scn.backend, scn.system)
    estimates = observe_duration(scn, backend, duration_index)
    return DurationRecord(
        duration_index=duration_index,
        delta=delta,
        theta_hat_ab=estimates[RECEIVER_BOB],
        theta_hat_ba=estimates[RECEIVER_ALICE],
        theta_hat_ae=estimates[RECEIVER_EVE_FROM_A],
        theta_hat_be=estimates[RECEIVER_EVE_FROM_B],
        q_b=quantize(estimates[RECEIVER_BOB], delta).index,
        q_a=quantize(estimates[RECEIVER_ALICE], delta).index,
        q_e_from_a=quantize(estimates[RECEIVER_EVE_FROM_A], delta).index,
        q_e_from_b=quantize(estimates[RECEIVER_EVE_FROM_B], delta).index,
    )


class ExperimentRunner:
    """Runs the figure experiments for one scenario."""

    def __init__(
        self,
        scenario: Scenario,
        max_workers: Optional[int] = None,
        chunk_size: Optional[int] = None,
    ):
        """
        Initialize runner.

        Args:
            scenario: Validated scenario
            max_workers: Worker threads (default: config.MAX_WORKERS)
            chunk_size: Durations per work unit (default: config.CHUNK_SIZE)
        """
        self.scenario = scenario
        self.max_workers = max_workers or config.MAX_WORKERS
        self.chunk_size = chunk_size or config.CHUNK_SIZE

    def _map_chunks(self, func, total: int) -> List:
        """Apply func to every (start, stop) chunk; results come back in chunk order."""
        bounds = chunk_bounds(total, self.chunk_size)
        if self.max_workers <= 1 or len(bounds) == 1:
            return [func(start, stop) for start, stop in bounds]
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            return list(executor.map(lambda b: func(*b), bounds))

    def collect_estimates(self, pilot_length: int) -> np.ndarray:
        """
        Θ̂ of every receiver over all durations.

        Returns:
            Array of shape (D, 4), columns in ESTIMATE_ORDER
        """
        scn = self.scenario.with_pilot_length(pilot_length)
        backend = get_backend(scn.backend, scn.system)

        def work(start: int, stop: int) -> np.ndarray:
            block = np.empty((stop - start, len(ESTIMATE_ORDER)))
            for row, index in enumerate(range(start, stop)):
                estimates = observe_duration(scn, backend, index)
                block[row] = [estimates[r] for r in ESTIMATE_ORDER]
            return block

        return np.vstack(self._map_chunks(work, scn.durations))

    def collect_hierarchical(self, pilot_length: int):
        """Normalized (Θ̃_ab, Θ̃_ba) pairs drawn chunk by chunk from per-chunk streams."""
        seed = self.scenario.seed

        def work(start: int, stop: int):
            rng = hierarchical_rng(seed, pilot_length, start // self.chunk_size)
            return sample_hierarchical(pilot_length, stop - start, rng)

        chunks = self._map_chunks(work, self.scenario.durations)
        theta_ab = np.concatenate([c[0] for c in chunks])
        theta_ba = np.concatenate([c[1] for c in chunks])
        return theta_ab, theta_ba

    def run_fig4(self, n_values: Sequence[int], bins: int = 40) -> Fig4Result:
        """
        Histograms of Θ̂ at every receiver for each N.

        All four receivers share one set of bin edges per N; masses are
        counts divided by D.
        """
        require_nonempty(n_values, "n_values")
        durations = self.scenario.durations
        rows = []
        ks_rows = []
        samples: Dict[int, Dict[str, np.ndarray]] = {}
        for n in n_values:
            logger.info(f"fig4: N={n}, D={durations}, backend={self.scenario.backend.value}")
            estimates = self.collect_estimates(n)
            per_node = {r: estimates[:, i] for i, r in enumerate(ESTIMATE_ORDER)}
            samples[n] = per_node
            edges = np.histogram_bin_edges(estimates, bins=bins)
            for node in RECEIVERS:
                counts, _ = np.histogram(per_node[node], bins=edges)
                if counts.sum() == 0:
                    logger.warning(f"fig4: empty histogram for {node} at N={n}")
                for left, right, count in zip(edges[:-1], edges[1:], counts):
                    rows.append({
                        'N': n, 'node': node,
                        'bin_left': float(left), 'bin_right': float(right),
                        'mass': count / durations, 'D': durations,
                    })
            for first, second in KS_PAIRS:
                test = stats.ks_2samp(per_node[first], per_node[second])
                ks_rows.append({
                    'N': n, 'pair': f"{first}-{second}",
                    'ks_statistic': float(test.statistic), 'p_value': float(test.pvalue),
                    'D': durations,
                })
        return Fig4Result(rows, ks_rows, samples, metadata={'bins': bins})

    def run_fig5(self, n_range: Sequence[int]) -> ExperimentResult:
        """
        MSE of every receiver's Θ̂ against the legitimate Θ_ab, per N.

        Θ_ba equals Θ_ab, and Eve is scored against Θ_ab because that is the
        value she needs to reproduce.
        """
        require_nonempty(n_range, "n_range")
        if self.scenario.backend != BackendType.GENERATIVE:
            logger.warning(f"fig5 running on the {self.scenario.backend.value} backend")
        rows = []
        for n in n_range:
            scn = self.scenario.with_pilot_length(n)
            theta_ab = theoretical_npsds(scn.link_ab, scn.system)
            logger.info(f"fig5: N={n}, theta_ab={theta_ab:.6g}")
            estimates = self.collect_estimates(n)
            columns = {r: estimates[:, i] for i, r in enumerate(ESTIMATE_ORDER)}
            rows.append({
                'N': n,
                'theta_ab': theta_ab,
                'mse_ab': mse(columns[RECEIVER_BOB], theta_ab),
                'mse_ba': mse(columns[RECEIVER_ALICE], theta_ab),
                'mse_ae': mse(columns[RECEIVER_EVE_FROM_A], theta_ab),
                'mse_be': mse(columns[RECEIVER_EVE_FROM_B], theta_ab),
                'D': scn.durations,
            })
        return ExperimentResult('fig5', FIG5_COLUMNS, rows)

    def run_fig6(
        self,
        n_values: Sequence[int],
        gamma_grid: Sequence[float],
        quadrature_order: int = 100,
    ) -> Fig6Result:
        """
        Theory and hierarchical-simulation KDR for every (N, γ).

        The simulated rate compares floor indices of (Θ̃_ab, Θ̃_ba) pairs at
        Δ = γN; one set of draws per N is reused across the γ grid.
        """
        require_nonempty(n_values, "n_values")
        require_nonempty(gamma_grid, "gamma_grid")
        if self.scenario.backend != BackendType.GENERATIVE:
            logger.warning("fig6 samples the hierarchical model; the backend setting is not used")
        points = []
        for n in n_values:
            theta_ab, theta_ba = self.collect_hierarchical(n)
            for gamma in gamma_grid:
                params = TheoryParams.from_gamma(n, gamma, quadrature_order)
                mismatches = quantize_many(theta_ab, params.step) != quantize_many(theta_ba, params.step)
                simulated = empirical_kdr(mismatches)
                theory = kdr_theory(params)
                logger.info(
                    f"fig6: N={n}, gamma={gamma}, kdr_theory={theory:.6g}, "
                    f"kdr_sim={simulated.rate:.6g} ± {simulated.stderr:.2g}"
                )
                points.append(KdrCurvePoint(
                    pilot_length=n, gamma=gamma,
                    kdr_theory=theory, kdr_sim=simulated.rate, stderr=simulated.stderr,
                    durations=simulated.durations, quadrature_order=quadrature_order,
                ))
        return Fig6Result(points)

    def run_keyrates(self, n_values: Sequence[int], gamma_grid: Sequence[float]) -> ExperimentResult:
        """
        End-to-end KDR through the observation pipeline.

        Every receiver normalizes with η = N/Θ_ab and quantizes with Δ = γN.
        Reported pairs: Alice-Bob, Bob against Eve's copy of Alice's burst,
        and Alice against Eve's copy of Bob's burst.
        """
        require_nonempty(n_values, "n_values")
        require_nonempty(gamma_grid, "gamma_grid")
        rows = []
        for n in n_values:
            scn = self.scenario.with_pilot_length(n)
            theta_ab = theoretical_npsds(scn.link_ab, scn.system)
            normalized = self.collect_estimates(n) * (n / theta_ab)
            columns = {r: normalized[:, i] for i, r in enumerate(ESTIMATE_ORDER)}
            for gamma in gamma_grid:
                step = gamma * n
                keys = {r: quantize_many(v, step) for r, v in columns.items()}
                ab = empirical_kdr(keys[RECEIVER_ALICE] != keys[RECEIVER_BOB])
                b_ea = empirical_kdr(keys[RECEIVER_BOB] != keys[RECEIVER_EVE_FROM_A])
                a_eb = empirical_kdr(keys[RECEIVER_ALICE] != keys[RECEIVER_EVE_FROM_B])
                logger.info(f"keyrates: N={n}, gamma={gamma}, kdr_ab={ab.rate:.4g}, kdr_b_ea={b_ea.rate:.4g}")
                rows.append({
                    'N': n, 'gamma': gamma,
                    'kdr_ab': ab.rate, 'stderr_ab': ab.stderr,
                    'kdr_b_ea': b_ea.rate, 'stderr_b_ea': b_ea.stderr,
                    'kdr_a_eb': a_eb.rate, 'stderr_a_eb': a_eb.stderr,
                    'D': scn.durations,
                })
        return ExperimentResult('keyrates', KEYRATES_COLUMNS, rows)

    def run_single(self, delta: float, duration_index: int = 0) -> ExperimentResult:
        """One key duration as a single row, keys exported in hex."""
        record = run_key_duration(self.scenario, duration_index, delta)

        def hex_key(index: int) -> str:
            return export_key_hex(KeyIndex(index=index, step=delta))

        row = record.model_dump()
        row.update({
            'key_b': hex_key(record.q_b),
            'key_a': hex_key(record.q_a),
            'key_e_from_a': hex_key(record.q_e_from_a),
            'key_e_from_b': hex_key(record.q_e_from_b),
        })
        return ExperimentResult('single-run', SINGLE_RUN_COLUMNS, [row])
