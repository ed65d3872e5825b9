"""Command-line entry point: load a configuration, run one experiment, write outputs."""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..config import config
from ..core.exceptions import ConfigError, DopplerKeygenError
from ..experiments import ExperimentRunner
from ..experiments.models import MAX_SEED, ExperimentGrid, ExperimentResult, Fig4Result, Scenario
from ..signals.backends import BackendType
from ..utils.constants import FIG4_KS_COLUMNS
from ..utils.logger import setup_logging
from .config_loader import config_from_mapping, load_config
from .plots import plot_result
from .selftest import run_selftest
from .writers import emit_csv, write_manifest

logger = logging.getLogger(__name__)

EXPERIMENTS = ('fig4', 'fig5', 'fig6', 'single-run', 'selftest', 'keyrates')
PLOTTED = ('fig4', 'fig5', 'fig6', 'keyrates')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


class RunManifest(BaseModel):
    """What the user asked this invocation to do."""

    model_config = ConfigDict(frozen=True)

    experiment: str = Field(..., pattern="^(fig4|fig5|fig6|single-run|selftest|keyrates)$")
    config_path: Optional[Path] = None
    out_dir: Path
    seed_override: Optional[int] = Field(None, ge=0, le=MAX_SEED)
    backend_override: Optional[BackendType] = None
    durations_override: Optional[int] = Field(None, ge=1)
    quadrature_order_override: Optional[int] = Field(None, ge=1)
    plots: bool = True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.cli",
        description="Doppler-shift key generation experiments",
    )
    parser.add_argument("--experiment", required=True, choices=EXPERIMENTS, help="Experiment to run")
    parser.add_argument("--config", default=None, help=f"YAML configuration (default: {config.DEFAULT_CONFIG_PATH} if present)")
    parser.add_argument("--out-dir", default=config.DEFAULT_OUT_DIR, help="Directory for CSV, SVG and manifest")
    parser.add_argument("--seed", type=int, default=None, help="Override the configured seed")
    parser.add_argument("--no-plots", action="store_true", help="Skip SVG output")
    parser.add_argument("--backend", choices=[b.value for b in BackendType], default=None, help="Observation backend")
    parser.add_argument("--durations", type=int, default=None, help="Override the number of key durations D")
    parser.add_argument("--quadrature-order", type=int, default=None, help="Override the quadrature order M")
    return parser


def _resolve_config_path(argument: Optional[str]) -> Optional[Path]:
    if argument is not None:
        return Path(argument)
    default = Path(config.DEFAULT_CONFIG_PATH)
    return default if default.exists() else None


def _load(manifest: RunManifest):
    if manifest.config_path is None:
        logger.warning("No configuration file found; using built-in defaults")
        scenario, grid = config_from_mapping({}, source="<defaults>")
    else:
        scenario, grid = load_config(manifest.config_path)
    scenario = scenario.with_overrides(
        seed=manifest.seed_override,
        backend=manifest.backend_override,
        durations=manifest.durations_override,
    )
    if manifest.quadrature_order_override is not None:
        grid = grid.model_copy(update={'quadrature_order': manifest.quadrature_order_override})
    return scenario, grid


def run_experiment(experiment: str, scenario: Scenario, grid: ExperimentGrid) -> ExperimentResult:
    """Dispatch one named experiment."""
    if experiment == 'selftest':
        return run_selftest()
    runner = ExperimentRunner(scenario)
    if experiment == 'fig4':
        return runner.run_fig4(grid.n_values, bins=grid.histogram_bins)
    if experiment == 'fig5':
        return runner.run_fig5(grid.n_range)
    if experiment == 'fig6':
        return runner.run_fig6(grid.n_values, grid.gamma_grid, grid.quadrature_order)
    if experiment == 'keyrates':
        return runner.run_keyrates(grid.n_values, grid.gamma_grid)
    return runner.run_single(grid.quantization_step)


def execute(manifest: RunManifest) -> int:
    """Run the requested experiment and write its outputs; returns the exit status."""
    scenario, grid = _load(manifest)
    logger.info(
        f"Running {manifest.experiment} (seed={scenario.seed}, D={scenario.durations}, "
        f"backend={scenario.backend.value})"
    )
    result = run_experiment(manifest.experiment, scenario, grid)

    out_dir = manifest.out_dir
    written: List[str] = []
    written.append(emit_csv(result.rows, result.columns, out_dir / f"{manifest.experiment}.csv").name)
    if isinstance(result, Fig4Result):
        written.append(emit_csv(result.ks_rows, FIG4_KS_COLUMNS, out_dir / "fig4_ks.csv").name)
    if manifest.plots and manifest.experiment in PLOTTED:
        written.append(plot_result(result, out_dir / f"{manifest.experiment}.svg").name)

    write_manifest(
        out_dir,
        experiment=manifest.experiment,
        config_path=manifest.config_path,
        seed=scenario.seed,
        outputs=written,
        extra={'backend': scenario.backend.value, 'durations': scenario.durations},
    )
    if result.metadata.get('failed'):
        logger.error(f"{result.metadata['failed']} self-test check(s) failed")
        return EXIT_FAILURE
    return EXIT_OK


def _error_summary(exc: Exception) -> str:
    summary = {'error': type(exc).__name__, 'message': str(exc)}
    if isinstance(exc, ConfigError):
        summary['errors'] = exc.errors
    return json.dumps(summary, sort_keys=True)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(config.log_level)
    try:
        manifest = RunManifest(
            experiment=args.experiment,
            config_path=_resolve_config_path(args.config),
            out_dir=Path(args.out_dir),
            seed_override=args.seed,
            backend_override=args.backend,
            durations_override=args.durations,
            quadrature_order_override=args.quadrature_order,
            plots=config.PLOTS_ENABLED and not args.no_plots,
        )
    except ValueError as e:
        print(json.dumps({'error': 'UsageError', 'message': str(e)}, sort_keys=True), file=sys.stderr)
        return EXIT_CONFIG
    try:
        return execute(manifest)
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        print(_error_summary(e), file=sys.stderr)
        return EXIT_CONFIG
    except DopplerKeygenError as e:
        logger.error(f"{manifest.experiment} failed: {e}")
        print(_error_summary(e), file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"Unexpected error in {manifest.experiment}")
        print(_error_summary(e), file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
