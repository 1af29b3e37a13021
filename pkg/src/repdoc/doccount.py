"""Constant-time document-frequency counting over the binarized suffix tree.

One pass over (LCP, document array) yields, per internal slot, the number of
redundant suffix pairs below that slot's binary node, with each node's chain
total moved to its last chain slot. The unary encoding of those counts
answers df for any pattern range with two select calls. Several encodings
trade space for the structure in different ways; all answer identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import Collection, LexRange, SuffixOracle
from .errors import InvalidParamError
from .succinct.bits import (
    DeltaBlockBitvector,
    GapBitvector,
    GrammarBitvector,
    PlainBitvector,
    RunLengthBitvector,
    SparseBitvector,
    SparseRunBitvector,
)

ENCODINGS = (
    "plain",
    "rle",
    "sparse-runs",
    "delta",
    "grammar",
    "pruned-plain-gap",
    "pruned-plain-rle",
    "pruned-rle-gap",
    "pruned-rle-rle",
    "sparse-sparse",
    "sparse-sparse-one",
    "sparse-runs-one",
    "delta-one",
)


@dataclass
class RedundancyArrays:
    """Per-slot redundancy counts of the binarized suffix tree.

    values[s] carries the whole chain sum of the node whose last chain slot
    is s (zero elsewhere); filtered[s] keeps only the share of chain nodes
    spanning more than one document; multi[s] says whether the binary node at
    slot s spans more than one document.
    """

    values: np.ndarray
    filtered: np.ndarray
    multi: np.ndarray
    n: int
    d: int


def build_h(collection: Collection, oracle: SuffixOracle) -> RedundancyArrays:
    from .suffixtree import redundancy_sweep

    lcp = oracle.lcp_array()
    da = oracle.document_array()
    values, filtered, multi = redundancy_sweep(
        lcp.astype(np.int64), da.astype(np.int64), collection.d
    )
    return RedundancyArrays(values, filtered, multi, collection.n, collection.d)


def measure_h_runs(h: RedundancyArrays) -> int:
    """Maximal runs of 1-bits in the unary encoding of the counts."""
    slots = h.values.shape[0]
    if slots == 0:
        return 0
    return 1 + int(np.count_nonzero(h.values[: slots - 1] > 0))


def _unary_bits(values: np.ndarray) -> np.ndarray:
    """1 0^{v} per value, concatenated, as a bool array."""
    slots = values.shape[0]
    total = slots + int(values.sum())
    bits = np.zeros(total, dtype=bool)
    if slots:
        ones = np.arange(slots, dtype=np.int64) + np.concatenate(
            ([0], np.cumsum(values[:-1], dtype=np.int64))
        )
        bits[ones] = True
    return bits


def _unary_one_positions(values: np.ndarray) -> tuple[np.ndarray, int]:
    slots = values.shape[0]
    total = slots + int(values.sum())
    if not slots:
        return np.empty(0, dtype=np.int64), total
    ones = np.arange(slots, dtype=np.int64) + np.concatenate(
        ([0], np.cumsum(values[:-1], dtype=np.int64))
    )
    return ones, total


class CountIndex:
    """Document-frequency structure under a selected encoding."""

    def __init__(self, encoding: str, n: int, d: int, parts: dict):
        self.encoding = encoding
        self.n = n
        self.d = d
        self.parts = parts

    def count(self, rng: LexRange) -> int:
        return count_df(self, rng)

    def size_in_bits(self) -> int:
        return sum(p.size_in_bits() for p in self.parts.values()) + 128


def build_count_index(h: RedundancyArrays, encoding: str = "plain") -> CountIndex:
    if encoding not in ENCODINGS:
        raise InvalidParamError(f"unknown count encoding {encoding!r}")
    values = h.values
    parts: dict = {}

    if encoding in ("plain", "rle", "sparse-runs", "delta", "grammar"):
        bits = _unary_bits(values)
        ctor = {
            "plain": PlainBitvector,
            "rle": RunLengthBitvector,
            "sparse-runs": SparseRunBitvector,
            "delta": DeltaBlockBitvector,
            "grammar": GrammarBitvector,
        }[encoding]
        parts["h"] = ctor(bits)
    elif encoding.startswith("pruned-"):
        survivors = h.multi
        pruned_vals = h.filtered[survivors]
        bits = _unary_bits(pruned_vals)
        h_ctor = PlainBitvector if "plain" in encoding else RunLengthBitvector
        f_ctor = GapBitvector if encoding.endswith("gap") else RunLengthBitvector
        parts["h"] = h_ctor(bits)
        parts["f"] = f_ctor(survivors)
    elif encoding == "sparse-sparse":
        marked = values > 0
        parts["fs"] = SparseBitvector.from_bits(marked)
        ones, total = _unary_one_positions(values[marked])
        parts["h"] = SparseBitvector(ones, max(total, 1))
    elif encoding == "sparse-sparse-one":
        marked = values > 1
        parts["fs"] = SparseBitvector.from_bits(marked)
        parts["f1"] = SparseBitvector.from_bits(values == 1)
        ones, total = _unary_one_positions(values[marked])
        parts["h"] = SparseBitvector(ones, max(total, 1))
    elif encoding in ("sparse-runs-one", "delta-one"):
        parts["f1"] = SparseBitvector.from_bits(values == 1)
        squashed = np.where(values == 1, 0, values)
        bits = _unary_bits(squashed)
        ctor = SparseRunBitvector if encoding == "sparse-runs-one" else DeltaBlockBitvector
        parts["h"] = ctor(bits)
    return CountIndex(encoding, h.n, h.d, parts)


def _select_end(bv, j: int) -> int:
    """select1 with a one-past-the-end sentinel at ones+1."""
    if j == bv.ones + 1:
        return bv.n + 1
    return bv.select(1, j)


def _marked_prefix_sum(h_bv, t: int, m: int) -> int:
    """Sum of the first t encoded counts (t <= m marked slots)."""
    if t <= 0:
        return 0
    if t >= m:
        return h_bv.n - m
    return h_bv.select(1, t + 1) - (t + 1)


def count_df(index: CountIndex, rng: LexRange) -> int:
    """Distinct documents among the suffixes of a pattern's match range."""
    if rng.is_empty:
        return 0
    lo, hi = rng.lo, rng.hi
    if lo == hi:
        return 1
    enc = index.encoding
    parts = index.parts
    if enc in ("plain", "rle", "sparse-runs", "delta", "grammar"):
        bv = parts["h"]
        return 2 * (hi - lo) - (_select_end(bv, hi) - _select_end(bv, lo)) + 1
    if enc.startswith("pruned-"):
        f = parts["f"]
        l1 = f.rank(1, lo - 1) + 1
        r1 = f.rank(1, hi - 1) + 1
        if l1 == r1:
            return 1
        bv = parts["h"]
        return 2 * (r1 - l1) - (_select_end(bv, r1) - _select_end(bv, l1)) + 1
    span = hi + 1 - lo
    if enc == "sparse-sparse":
        fs = parts["fs"]
        a = fs.rank(1, lo - 1)
        b = fs.rank(1, hi - 1)
        total = _marked_prefix_sum(parts["h"], b, fs.ones) - _marked_prefix_sum(
            parts["h"], a, fs.ones
        )
        return span - total
    if enc == "sparse-sparse-one":
        fs = parts["fs"]
        f1 = parts["f1"]
        a = fs.rank(1, lo - 1)
        b = fs.rank(1, hi - 1)
        total = _marked_prefix_sum(parts["h"], b, fs.ones) - _marked_prefix_sum(
            parts["h"], a, fs.ones
        )
        total += f1.rank(1, hi - 1) - f1.rank(1, lo - 1)
        return span - total
    # sparse-runs-one / delta-one: unary over all slots, ones squashed
    bv = parts["h"]
    f1 = parts["f1"]
    total = (_select_end(bv, hi) - _select_end(bv, lo)) - (hi - lo)
    total += f1.rank(1, hi - 1) - f1.rank(1, lo - 1)
    return span - total
