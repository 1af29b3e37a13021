"""Range-minimum queries returning the leftmost minimum position.

Two-level structure: per-block minima under a sparse table, with block-local
scans at the range edges. Queries take (i, j) only; the values the index was
built from are kept internally.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ..errors import OutOfRangeError

_BLOCK = 32


@njit(cache=True)
def _scan_min(values, lo, hi):
    """Leftmost argmin over values[lo..hi], 0-based inclusive."""
    best = lo
    bv = values[lo]
    for k in range(lo + 1, hi + 1):
        if values[k] < bv:
            bv = values[k]
            best = k
    return best


@njit(cache=True)
def _rmq_query(values, table, nblocks, levels, i, j):
    bi = i // _BLOCK
    bj = j // _BLOCK
    if bi == bj:
        return _scan_min(values, i, j)
    best = _scan_min(values, i, (bi + 1) * _BLOCK - 1)
    rstart = bj * _BLOCK
    rbest = _scan_min(values, rstart, j)
    lo_blk = bi + 1
    hi_blk = bj - 1
    if lo_blk <= hi_blk:
        span = hi_blk - lo_blk + 1
        level = 0
        while (2 << level) <= span:
            level += 1
        a = table[level, lo_blk]
        b = table[level, hi_blk - (1 << level) + 1]
        mid = a if values[a] <= values[b] else b
        if values[mid] < values[best]:
            best = mid
    if values[rbest] < values[best]:
        best = rbest
    return best


class RmqIndex:
    """Positional range-minimum index with leftmost tie-breaking."""

    def __init__(self, values):
        values = np.ascontiguousarray(values, dtype=np.int64)
        self.n = int(values.shape[0])
        self._values = values
        nblocks = max((self.n + _BLOCK - 1) // _BLOCK, 1)
        levels = max(int(nblocks - 1).bit_length(), 1)
        table = np.zeros((levels, nblocks), dtype=np.int64)
        for b in range(nblocks):
            lo = b * _BLOCK
            hi = min(lo + _BLOCK - 1, self.n - 1)
            table[0, b] = _scan_min(values, lo, hi) if self.n else 0
        for level in range(1, levels):
            half = 1 << (level - 1)
            for b in range(nblocks - (1 << level) + 1):
                a = table[level - 1, b]
                c = table[level - 1, b + half]
                table[level, b] = a if values[a] <= values[c] else c
        self._table = table
        self._nblocks = nblocks
        self._levels = levels

    def query(self, i: int, j: int) -> int:
        """1-based position of the leftmost minimum in [i..j] (inclusive)."""
        if not 1 <= i <= j <= self.n:
            raise OutOfRangeError(f"range [{i}..{j}] not within [1..{self.n}]")
        return int(
            _rmq_query(self._values, self._table, self._nblocks, self._levels, i - 1, j - 1)
        ) + 1

    def size_in_bits(self) -> int:
        width = max(int(self.n).bit_length(), 1)
        return self.n * width + self._table.size * max(int(self._nblocks).bit_length(), 1)


def rmq(index: RmqIndex, i: int, j: int) -> int:
    return index.query(i, j)
