"""Document retrieval indexes for repetitive string collections.

Three index families over a shared suffix oracle:

- an interleaved per-document LCP index for document listing and counting,
- precomputed (grammar-compressed) document lists for listing and top-k,
- a redundancy-counting bitvector for constant-time document frequency,

plus brute-force baselines, a ranked multi-term query engine, synthetic
collection generators, and a CLI.
"""

from .corpus import (
    Collection,
    LexRange,
    SuffixOracle,
    TERMINATOR,
    build_collection,
    build_suffix_oracle,
)

__all__ = [
    "Collection",
    "LexRange",
    "SuffixOracle",
    "TERMINATOR",
    "build_collection",
    "build_suffix_oracle",
]
