"""Load the flat YAML experiment configuration into validated models."""
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..core.exceptions import ConfigError
from ..experiments.models import MAX_SEED, ExperimentGrid, Scenario
from ..signals.backends import BackendType
from ..signals.models import LinkConfig, ModulationType, SystemConfig
from ..utils.constants import SPEED_OF_LIGHT

logger = logging.getLogger(__name__)

# (linear key, decibel key, default linear value)
DB_PAIRS = (
    ('symbol_energy', 'symbol_energy_db', 10.0),
    ('noise_variance', 'noise_variance_db', 10.0 ** 0.1),
)

# (link label, forward Doppler key, velocity key, reverse Doppler key, default Hz)
LINK_KEYS = (
    ('ab', 'doppler_ab_hz', 'velocity_ab_mps', 'doppler_ba_hz', 200e6),
    ('ae', 'doppler_ae_hz', 'velocity_ae_mps', 'doppler_ea_hz', 500e6),
    ('be', 'doppler_be_hz', 'velocity_be_mps', 'doppler_eb_hz', 400e6),
)

RECIPROCITY_REL_TOL = 1e-12


class FlatConfig(BaseModel):
    """Every key accepted in a configuration file."""

    model_config = ConfigDict(extra="forbid", frozen=True, allow_inf_nan=False)

    carrier_freq_hz: float = Field(1e9, gt=0)
    symbol_period_s: float = Field(1.0 / 9.0, gt=0)
    symbol_energy: Optional[float] = Field(None, gt=0)
    symbol_energy_db: Optional[float] = None
    noise_variance: Optional[float] = Field(None, ge=0)
    noise_variance_db: Optional[float] = None
    path_loss_exponent: float = Field(2.0, ge=0)
    modulation: ModulationType = ModulationType.BPSK
    pilot_length: int = Field(10, ge=1)

    doppler_ab_hz: Optional[float] = None
    velocity_ab_mps: Optional[float] = None
    doppler_ba_hz: Optional[float] = None
    doppler_ae_hz: Optional[float] = None
    velocity_ae_mps: Optional[float] = None
    doppler_ea_hz: Optional[float] = None
    doppler_be_hz: Optional[float] = None
    velocity_be_mps: Optional[float] = None
    doppler_eb_hz: Optional[float] = None

    distance_ab: float = Field(1.0, gt=0)
    distance_ae: float = Field(1.0, gt=0)
    distance_be: float = Field(1.0, gt=0)

    durations: int = Field(10_000, ge=1)
    seed: int = Field(20240917, ge=0, le=MAX_SEED)
    backend: BackendType = BackendType.GENERATIVE
    quadrature_order: int = Field(100, ge=1)
    n_values: List[int] = [10, 20, 50]
    n_range: List[int] = [2, 5, 10, 20, 50]
    gamma_grid: List[float] = [0.02, 0.05, 0.1, 0.2, 0.35, 0.5]
    histogram_bins: int = Field(40, ge=1)
    quantization_step: float = Field(1.0, gt=0)


def _format_validation_error(exc: ValidationError) -> List[str]:
    messages = []
    for err in exc.errors():
        location = ".".join(str(part) for part in err["loc"]) or "<root>"
        messages.append(f"{location}: {err['msg']}")
    return messages


def _cross_key_errors(data: Dict[str, Any]) -> List[str]:
    """Violations that involve more than one key, checked on the raw mapping."""
    errors = []
    for linear, decibel, _ in DB_PAIRS:
        if data.get(linear) is not None and data.get(decibel) is not None:
            errors.append(f"{linear}: give either {linear} or {decibel}, not both")
    for _, doppler, velocity, _, _ in LINK_KEYS:
        if data.get(doppler) is not None and data.get(velocity) is not None:
            errors.append(f"{doppler}: give either {doppler} or {velocity}, not both")
    return errors


def _linear(flat: FlatConfig, linear: str, decibel: str, default: float) -> float:
    if getattr(flat, linear) is not None:
        return getattr(flat, linear)
    if getattr(flat, decibel) is not None:
        return 10.0 ** (getattr(flat, decibel) / 10.0)
    return default


def _forward_doppler(flat: FlatConfig, doppler: str, velocity: str, default: float) -> float:
    if getattr(flat, doppler) is not None:
        return getattr(flat, doppler)
    if getattr(flat, velocity) is not None:
        return getattr(flat, velocity) * flat.carrier_freq_hz / SPEED_OF_LIGHT
    return default


def _reciprocity_errors(flat: FlatConfig, forward: Dict[str, float]) -> List[str]:
    errors = []
    for label, _, _, reverse_key, _ in LINK_KEYS:
        reverse = getattr(flat, reverse_key)
        if reverse is None:
            continue
        expected = -forward[label]
        if not math.isclose(reverse, expected, rel_tol=RECIPROCITY_REL_TOL, abs_tol=0.0):
            errors.append(
                f"{reverse_key}: reverse Doppler must equal the negated forward shift "
                f"({expected!r}), got {reverse!r}"
            )
    return errors


def config_from_mapping(data: Optional[Dict[str, Any]], source: str = "<mapping>") -> Tuple[Scenario, ExperimentGrid]:
    """
    Validate a flat configuration mapping.

    Every violated key or invariant is reported in one ConfigError.
    """
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: configuration must be a mapping", [f"<root>: got {type(data).__name__}"])

    errors = _cross_key_errors(data)
    try:
        flat = FlatConfig.model_validate(data)
    except ValidationError as exc:
        errors.extend(_format_validation_error(exc))
        raise ConfigError(f"{source}: invalid configuration", errors)

    forward = {
        label: _forward_doppler(flat, doppler, velocity, default)
        for label, doppler, velocity, _, default in LINK_KEYS
    }
    errors.extend(_reciprocity_errors(flat, forward))
    if errors:
        raise ConfigError(f"{source}: invalid configuration", errors)

    try:
        system = SystemConfig(
            carrier_freq=flat.carrier_freq_hz,
            symbol_period=flat.symbol_period_s,
            symbol_energy=_linear(flat, *DB_PAIRS[0]),
            noise_variance=_linear(flat, *DB_PAIRS[1]),
            path_loss_exponent=flat.path_loss_exponent,
            pilot_length=flat.pilot_length,
            modulation=flat.modulation,
        )
        scenario = Scenario(
            system=system,
            link_ab=LinkConfig(doppler_shift=forward['ab'], distance=flat.distance_ab),
            link_ae=LinkConfig(doppler_shift=forward['ae'], distance=flat.distance_ae),
            link_be=LinkConfig(doppler_shift=forward['be'], distance=flat.distance_be),
            durations=flat.durations,
            seed=flat.seed,
            backend=flat.backend,
        )
        grid = ExperimentGrid(
            n_values=tuple(flat.n_values),
            n_range=tuple(flat.n_range),
            gamma_grid=tuple(flat.gamma_grid),
            quadrature_order=flat.quadrature_order,
            histogram_bins=flat.histogram_bins,
            quantization_step=flat.quantization_step,
        )
    except ValidationError as exc:
        raise ConfigError(f"{source}: invalid configuration", _format_validation_error(exc))
    return scenario, grid


def load_config(path: Union[str, Path]) -> Tuple[Scenario, ExperimentGrid]:
    """
    Read and validate a configuration file.

    Args:
        path: YAML file with the flat key set of FlatConfig

    Returns:
        (Scenario, ExperimentGrid); absent keys take their documented defaults

    Raises:
        ConfigError: Missing file, YAML syntax error (with line and column), or
            validation failures (one entry per violated key)
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read configuration {path}: {exc}", [f"{path}: {exc.strerror or exc}"])

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark is not None else "unknown position"
        problem = getattr(exc, "problem", None) or str(exc)
        raise ConfigError(f"{path}: YAML syntax error at {where}", [f"{where}: {problem}"])

    scenario, grid = config_from_mapping(data, source=str(path))
    logger.info(f"Loaded configuration {path} (N={scenario.system.pilot_length}, D={scenario.durations})")
    return scenario, grid
