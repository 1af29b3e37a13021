"""Succinct primitives: bitvectors, wavelet trees, range-minimum queries."""

from .bits import (
    BITVECTOR_KINDS,
    DeltaBlockBitvector,
    GapBitvector,
    GrammarBitvector,
    PlainBitvector,
    RunLengthBitvector,
    SparseBitvector,
    bitvector_from_bits,
)
from .rmq import RmqIndex, rmq
from .wavelet import WaveletTree, wt_build

__all__ = [
    "BITVECTOR_KINDS",
    "DeltaBlockBitvector",
    "GapBitvector",
    "GrammarBitvector",
    "PlainBitvector",
    "RunLengthBitvector",
    "SparseBitvector",
    "bitvector_from_bits",
    "RmqIndex",
    "rmq",
    "WaveletTree",
    "wt_build",
]
