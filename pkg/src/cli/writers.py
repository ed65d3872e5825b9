"""CSV tables and the run manifest."""
import hashlib
import json
import logging
import math
from numbers import Integral, Real
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from .. import __version__
from ..core.exceptions import OutputError, UsageError

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"

RowsInput = Union[Iterable[Mapping[str, Any]], pd.DataFrame]


def format_value(value: Any) -> str:
    """
    Text form of one CSV cell.

    Floats use the shortest representation that round-trips, so at most 17
    significant digits and identical text for identical values.
    """
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Real):
        number = float(value)
        if math.isnan(number):
            return "nan"
        return repr(number)
    return str(value)


def emit_csv(rows: RowsInput, schema: Sequence[str], path: Union[str, Path]) -> Path:
    """
    Write rows as a CSV file with a header row.

    Args:
        rows: Dicts keyed exactly by the schema columns (or a DataFrame)
        schema: Column names in output order
        path: Destination file

    Returns:
        The written path

    Raises:
        UsageError: If a row's keys differ from the schema
        OutputError: If the file cannot be written
    """
    path = Path(path)
    columns = list(schema)
    records = rows.to_dict(orient="records") if isinstance(rows, pd.DataFrame) else list(rows)
    for number, row in enumerate(records):
        if set(row) != set(columns):
            raise UsageError(
                f"Row {number} does not match schema {columns}: got keys {sorted(row)}"
            )
    frame = pd.DataFrame(
        [[format_value(row[c]) for c in columns] for row in records],
        columns=columns,
        dtype=object,
    )
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as exc:
        raise OutputError(f"Cannot write CSV {path}: {exc}")
    logger.info(f"Wrote {len(records)} rows to {path}")
    return path


def config_sha256(path: Optional[Union[str, Path]]) -> str:
    """SHA-256 of the configuration file bytes (of nothing when no file was used)."""
    digest = hashlib.sha256()
    if path is not None:
        try:
            digest.update(Path(path).read_bytes())
        except OSError as exc:
            raise OutputError(f"Cannot hash configuration {path}: {exc}")
    return digest.hexdigest()


def write_manifest(
    out_dir: Union[str, Path],
    experiment: str,
    config_path: Optional[Union[str, Path]],
    seed: int,
    outputs: List[str],
    extra: Optional[Dict[str, Any]] = None,
) -> Path:
    """
    Record what produced the outputs of a run.

    The manifest holds no timestamps, so reruns produce identical bytes.
    """
    manifest = {
        'experiment': experiment,
        'config_path': str(config_path) if config_path is not None else None,
        'config_sha256': config_sha256(config_path),
        'seed': seed,
        'version': __version__,
        'outputs': sorted(outputs),
    }
    manifest.update(extra or {})
    path = Path(out_dir) / MANIFEST_NAME
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write("\n")
    except OSError as exc:
        raise OutputError(f"Cannot write manifest {path}: {exc}")
    logger.info(f"Wrote manifest to {path}")
    return path
