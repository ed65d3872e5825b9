"""Key quantization, comparison and disagreement accounting."""
from .quantizer import (
    KdrEstimate,
    KeyIndex,
    empirical_kdr,
    encode_key_bits,
    export_key_hex,
    key_match,
    quantize,
    quantize_many,
)

__all__ = [
    "KdrEstimate",
    "KeyIndex",
    "empirical_kdr",
    "encode_key_bits",
    "export_key_hex",
    "key_match",
    "quantize",
    "quantize_many",
]
