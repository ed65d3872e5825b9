"""Deterministic random sub-streams for parallel Monte Carlo."""
from typing import List, Tuple

import numpy as np

from ..utils.constants import STREAM_TAG_DURATION, STREAM_TAG_HIERARCHICAL
from ..utils.validators import require_positive_int


def duration_rng(seed: int, pilot_length: int, duration_index: int, stream_id: int) -> np.random.Generator:
    """Stream owned by one (N, duration, link or pilot) triple of a pipeline run."""
    return np.random.default_rng([seed, STREAM_TAG_DURATION, pilot_length, duration_index, stream_id])


def hierarchical_rng(seed: int, pilot_length: int, chunk_index: int) -> np.random.Generator:
    """Stream owned by one chunk of hierarchical-model draws."""
    return np.random.default_rng([seed, STREAM_TAG_HIERARCHICAL, pilot_length, chunk_index])


def chunk_bounds(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split range(total) into consecutive [start, stop) pieces of chunk_size."""
    total = require_positive_int(total, "total")
    chunk_size = require_positive_int(chunk_size, "chunk_size")
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]
