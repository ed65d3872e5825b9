"""Uniform quantization of NPSDS estimates into key indices."""
import logging
import math
from typing import Iterable, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.exceptions import DomainError, UsageError
from ..utils.validators import require_nonempty, require_nonnegative, require_positive, require_positive_int

logger = logging.getLogger(__name__)

_INDEX_LIMIT = float(2 ** 62)


class KeyIndex(BaseModel):
    """Quantizer output l with lΔ <= value < (l+1)Δ."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    step: float = Field(..., gt=0)


class KdrEstimate(BaseModel):
    """Empirical key disagreement rate over D durations."""

    model_config = ConfigDict(frozen=True)

    rate: float = Field(..., ge=0, le=1)
    stderr: float = Field(..., ge=0)
    durations: int = Field(..., ge=1)


def quantize(value: float, step: float) -> KeyIndex:
    """
    Map a nonnegative estimate to floor(value/step).

    The quotient is corrected so that the half-open cell [lΔ, (l+1)Δ) holds
    the value even when value/step rounds across an integer.
    """
    require_positive(step, "step")
    require_nonnegative(value, "value")
    quotient = value / step
    if not math.isfinite(quotient):
        raise DomainError(f"Quantizer index overflows for value={value!r}, step={step!r}")
    index = math.floor(quotient)
    if index * step > value:
        index -= 1
    elif (index + 1) * step <= value:
        index += 1
    return KeyIndex(index=index, step=step)


def quantize_many(values: np.ndarray, step: float) -> np.ndarray:
    """Vectorized quantize returning plain integer indices."""
    require_positive(step, "step")
    values = np.asarray(values, dtype=float)
    if not np.all(values >= 0):
        raise DomainError("Quantizer inputs must be nonnegative numbers")
    with np.errstate(over="ignore"):
        quotient = values / step
    # Indices must fit in int64
    if not np.all(quotient < _INDEX_LIMIT):
        raise DomainError(f"Quantizer index overflows for step={step!r}")
    index = np.floor(quotient)
    index = np.where(index * step > values, index - 1, index)
    index = np.where((index + 1) * step <= values, index + 1, index)
    return index.astype(np.int64)


def key_match(q_j: KeyIndex, q_k: KeyIndex) -> int:
    """Return 1 when the two indices disagree, 0 when they match."""
    if q_j.step != q_k.step:
        raise UsageError(f"Cannot compare keys quantized with steps {q_j.step} and {q_k.step}")
    return int(q_j.index != q_k.index)


def empirical_kdr(mismatches: Union[Iterable[int], np.ndarray]) -> KdrEstimate:
    """
    Fraction of mismatching durations with its binomial standard error.

    Args:
        mismatches: One 0/1 indicator per key duration

    Returns:
        KdrEstimate(rate, stderr = √(p(1-p)/D), durations = D)
    """
    if not isinstance(mismatches, np.ndarray):
        mismatches = list(mismatches)
    indicators = np.asarray(mismatches)
    require_nonempty(indicators.reshape(-1), "mismatches")
    durations = int(indicators.size)
    rate = float(np.count_nonzero(indicators)) / durations
    stderr = math.sqrt(rate * (1.0 - rate) / durations)
    return KdrEstimate(rate=rate, stderr=stderr, durations=durations)


def export_key_hex(q: KeyIndex) -> str:
    """Lowercase hexadecimal rendering of the key index."""
    return format(q.index, "x")


def encode_key_bits(q: KeyIndex, bits: int) -> str:
    """
    Fixed-width big-endian bit string of the key index.

    Raises:
        DomainError: If the index needs more than `bits` bits
    """
    bits = require_positive_int(bits, "bits")
    if q.index >= 1 << bits:
        raise DomainError(f"Key index {q.index} does not fit in {bits} bits")
    return format(q.index, f"0{bits}b")
