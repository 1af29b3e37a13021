"""Rank/select bitvectors in several encodings.

Conventions: bit positions are 1-based; rank(i) counts within positions
[1..i] (rank(0) == 0); select1(j)/select0(j) return the 1-based position of
the j-th occurrence. All structures are immutable after construction.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ..errors import OutOfRangeError

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _plain_rank1(words, sup, i):
    """Ones among the first i bits."""
    w = i >> 6
    r = i & 63
    g = w >> 3
    total = sup[g]
    for k in range(g << 3, w):
        total += _popcount(words[k])
    if r:
        mask = (_ONE << np.uint64(r)) - _ONE
        total += _popcount(words[w] & mask)
    return total


@njit(cache=True, inline="always")
def _word_select(word, t):
    """1-based position (1..64) of the t-th set bit inside a word."""
    pos = 0
    x = word
    while True:
        byte = x & np.uint64(0xFF)
        c = _popcount(byte)
        if c >= t:
            break
        t -= c
        x = x >> np.uint64(8)
        pos += 8
    b = np.int64(byte)
    for k in range(8):
        if (b >> k) & 1:
            t -= 1
            if t == 0:
                return pos + k + 1
    return -1


@njit(cache=True)
def _plain_select(words, sup, samples, j, ones_target):
    """Position of the j-th one (ones_target=1) or zero (ones_target=0)."""
    w = samples[(j - 1) >> 9]
    g = w >> 3
    if ones_target:
        cnt = sup[g]
        for k in range(g << 3, w):
            cnt += _popcount(words[k])
    else:
        cnt = (g << 9) - sup[g]
        for k in range(g << 3, w):
            cnt += 64 - _popcount(words[k])
    while True:
        word = words[w] if ones_target else ~words[w]
        c = _popcount(word)
        if cnt + c >= j:
            return (w << 6) + _word_select(word, j - cnt)
        cnt += c
        w += 1


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    packed = np.packbits(bits, bitorder="little")
    pad = (-packed.shape[0]) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    out = packed.view(np.uint64)
    return out if out.shape[0] else np.zeros(1, dtype=np.uint64)


class PlainBitvector:
    """Packed bits with per-512-bit rank counters and sampled selects."""

    kind = "plain"

    def __init__(self, bits):
        bits = np.ascontiguousarray(bits, dtype=bool)
        self.n = int(bits.shape[0])
        self.words = _pack_bits(bits)
        per_word = np.bitwise_count(self.words).astype(np.int64)
        cums = np.concatenate(([0], np.cumsum(per_word)))
        nsup = (self.words.shape[0] >> 3) + 1
        self.sup = cums[: nsup * 8 : 8].copy()
        self.ones = int(cums[-1])
        self.zeros = self.n - self.ones
        self._sel1 = self._sample_words(cums, self.ones)
        zcums = np.concatenate(([0], np.cumsum(64 - per_word)))
        self._sel0 = self._sample_words(zcums, int(zcums[-1]))

    @staticmethod
    def _sample_words(cums, total):
        if total == 0:
            return np.zeros(1, dtype=np.int64)
        targets = np.arange(0, total, 512, dtype=np.int64)
        return np.searchsorted(cums[1:], targets, side="right").astype(np.int64)

    def rank(self, sym: int, i: int) -> int:
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        ones = int(_plain_rank1(self.words, self.sup, i))
        return ones if sym else i - ones

    def select(self, sym: int, j: int) -> int:
        total = self.ones if sym else self.zeros
        if not 1 <= j <= total:
            raise OutOfRangeError(f"select index {j} not in [1..{total}]")
        return int(
            _plain_select(
                self.words, self.sup, self._sel1 if sym else self._sel0, j, 1 if sym else 0
            )
        )

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        return int((self.words[(i - 1) >> 6] >> np.uint64((i - 1) & 63)) & _ONE)

    def decode_bits(self) -> np.ndarray:
        out = np.unpackbits(self.words.view(np.uint8), bitorder="little")
        return out[: self.n].astype(bool)

    def size_in_bits(self) -> int:
        return (
            self.words.shape[0] * 64
            + self.sup.shape[0] * 64
            + self._sel1.shape[0] * 64
            + self._sel0.shape[0] * 64
        )


@njit(cache=True, inline="always")
def _unpack_fixed(packed, width, idx):
    if width == 0:
        return np.int64(0)
    bit = np.int64(idx) * width
    w = bit >> 6
    off = bit & 63
    val = packed[w] >> np.uint64(off)
    if off + width > 64:
        val |= packed[w + 1] << np.uint64(64 - off)
    return np.int64(val & ((_ONE << np.uint64(width)) - _ONE))


@njit(cache=True)
def _pack_fixed_all(packed, values, width):
    for idx in range(values.shape[0]):
        bit = np.int64(idx) * width
        w = bit >> 6
        off = bit & 63
        v = np.uint64(values[idx])
        packed[w] |= v << np.uint64(off)
        if off + width > 64:
            packed[w + 1] |= v >> np.uint64(64 - off)


@njit(cache=True, inline="always")
def _sparse_select1(hi_words, hi_sup, hi_sel1, lo, width, j):
    hpos = _plain_select(hi_words, hi_sup, hi_sel1, j, 1)
    bucket = hpos - j
    return (bucket << np.int64(width)) + _unpack_fixed(lo, width, j - 1) + 1


@njit(cache=True)
def _sparse_rank1(hi_words, hi_sup, hi_sel1, lo, width, m, p):
    lo_j, hi_j = 0, m
    while lo_j < hi_j:
        mid = (lo_j + hi_j + 1) >> 1
        if _sparse_select1(hi_words, hi_sup, hi_sel1, lo, width, mid) <= p:
            lo_j = mid
        else:
            hi_j = mid - 1
    return lo_j


class SparseBitvector:
    """Ones stored as high unary / low fixed-width position halves."""

    kind = "sparse"

    def __init__(self, positions, n: int):
        """positions: sorted 0-based positions of the ones."""
        positions = np.ascontiguousarray(positions, dtype=np.int64)
        self.n = int(n)
        self.ones = m = int(positions.shape[0])
        if m and (positions[-1] >= n or positions[0] < 0):
            raise OutOfRangeError("one-positions outside [0..n)")
        self.width = int(np.log2(max(self.n, 1) / m)) if m else 0
        w = self.width
        hi_len = ((self.n - 1) >> w) + m + 1 if m else 1
        hi = np.zeros(hi_len, dtype=bool)
        if m:
            hi[(positions >> w) + np.arange(m, dtype=np.int64)] = True
        self._hi = PlainBitvector(hi)
        nwords = (m * w + 63) // 64 + 1
        packed = np.zeros(nwords, dtype=np.uint64)
        if m and w:
            _pack_fixed_all(packed, positions & ((1 << w) - 1), w)
        self._lo = packed

    @classmethod
    def from_bits(cls, bits) -> "SparseBitvector":
        bits = np.ascontiguousarray(bits, dtype=bool)
        return cls(np.flatnonzero(bits), bits.shape[0])

    def rank(self, sym: int, i: int) -> int:
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        ones = int(
            _sparse_rank1(
                self._hi.words, self._hi.sup, self._hi._sel1, self._lo, self.width, self.ones, i
            )
        )
        return ones if sym else i - ones

    def select(self, sym: int, j: int) -> int:
        if sym:
            if not 1 <= j <= self.ones:
                raise OutOfRangeError(f"select index {j} not in [1..{self.ones}]")
            return int(
                _sparse_select1(
                    self._hi.words, self._hi.sup, self._hi._sel1, self._lo, self.width, j
                )
            )
        zeros = self.n - self.ones
        if not 1 <= j <= zeros:
            raise OutOfRangeError(f"select index {j} not in [1..{zeros}]")
        lo_p, hi_p = 1, self.n
        while lo_p < hi_p:
            mid = (lo_p + hi_p) >> 1
            if mid - self.rank(1, mid) >= j:
                hi_p = mid
            else:
                lo_p = mid + 1
        return lo_p

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        return self.rank(1, i) - self.rank(1, i - 1)

    def one_positions(self) -> np.ndarray:
        """0-based positions of the ones (decoded copy)."""
        return np.array([self.select(1, j) - 1 for j in range(1, self.ones + 1)], dtype=np.int64)

    def decode_bits(self) -> np.ndarray:
        bits = np.zeros(self.n, dtype=bool)
        if self.ones:
            bits[self.one_positions()] = True
        return bits

    def size_in_bits(self) -> int:
        return self._hi.size_in_bits() + self._lo.shape[0] * 64 + 128


# ---------------------------------------------------------------------------
# delta-coded run-length encodings


@njit(cache=True, inline="always")
def _bit_length(v):
    length = 0
    while v:
        v >>= 1
        length += 1
    return length


@njit(cache=True, inline="always")
def _delta_len(v):
    lv = _bit_length(v)
    llv = _bit_length(lv)
    return (llv - 1) + llv + (lv - 1)


@njit(cache=True, inline="always")
def _write_bits(words, pos, value, width):
    if width == 0:
        return pos
    w = pos >> 6
    off = pos & 63
    v = np.uint64(value)
    words[w] |= v << np.uint64(off)
    if off + width > 64:
        words[w + 1] |= v >> np.uint64(64 - off)
    return pos + width


@njit(cache=True, inline="always")
def _read_bits(words, pos, width):
    if width == 0:
        return np.int64(0), pos
    w = pos >> 6
    off = pos & 63
    val = words[w] >> np.uint64(off)
    if off + width > 64:
        val |= words[w + 1] << np.uint64(64 - off)
    val &= (_ONE << np.uint64(width)) - _ONE
    return np.int64(val), pos + width


@njit(cache=True, inline="always")
def _write_delta(words, pos, v):
    lv = _bit_length(v)
    llv = _bit_length(lv)
    pos += llv - 1  # unary zeros are implicit in the zero-initialized words
    pos = _write_bits(words, pos, 1, 1)  # top bit of lv terminates the zeros
    pos = _write_bits(words, pos, lv & ~(1 << (llv - 1)), llv - 1)
    pos = _write_bits(words, pos, v & ~(1 << (lv - 1)), lv - 1)
    return pos


@njit(cache=True, inline="always")
def _read_delta(words, pos):
    z = 0
    while True:
        w = words[pos >> 6] >> np.uint64(pos & 63)
        if w & _ONE:
            break
        pos += 1
        z += 1
    pos += 1  # the terminating one
    low_lv, pos = _read_bits(words, pos, z)
    lv = (np.int64(1) << np.int64(z)) | low_lv
    low, pos = _read_bits(words, pos, lv - 1)
    return (np.int64(1) << np.int64(lv - 1)) | low, pos


@njit(cache=True)
def _encode_pairs(gaps, runs, block_bits, block_mode, gaps_only):
    """Encode (gap, run) pairs; one directory entry per block.

    block_mode 0: new block when >= block_bits of stream were used since the
    last entry. block_mode > 0: new block every block_mode ones (the caller
    pre-splits runs). gaps_only: run lengths are all 1 and not encoded.
    """
    total = 0
    for k in range(gaps.shape[0]):
        total += _delta_len(gaps[k] + 1)
        if not gaps_only:
            total += _delta_len(runs[k])
    words = np.zeros((total + 63) // 64 + 1, dtype=np.uint64)
    max_blocks = gaps.shape[0] + 1
    blk_stream = np.empty(max_blocks, dtype=np.int64)
    blk_bits = np.empty(max_blocks, dtype=np.int64)
    blk_ones = np.empty(max_blocks, dtype=np.int64)
    nblk = 0
    pos = 0
    bits_done = 0
    ones_done = 0
    last_block_pos = np.int64(-1) << 40
    for k in range(gaps.shape[0]):
        start_new = 0
        if nblk == 0:
            start_new = 1
        elif block_mode == 0:
            if pos - last_block_pos >= block_bits:
                start_new = 1
        else:
            if ones_done % block_mode == 0:
                start_new = 1
        if start_new:
            blk_stream[nblk] = pos
            blk_bits[nblk] = bits_done
            blk_ones[nblk] = ones_done
            nblk += 1
            last_block_pos = pos
        pos = _write_delta(words, pos, gaps[k] + 1)
        if not gaps_only:
            pos = _write_delta(words, pos, runs[k])
        bits_done += gaps[k] + runs[k]
        ones_done += runs[k]
    return words[: (pos >> 6) + 2], blk_stream[:nblk], blk_bits[:nblk], blk_ones[:nblk], pos


@njit(cache=True)
def _pairs_rank1(words, blk_stream, blk_bits, blk_ones, gaps_only, p, n, total_ones):
    if p <= 0:
        return np.int64(0)
    lo, hi = 0, blk_stream.shape[0] - 1
    while lo < hi:  # rightmost block with bits_before < p
        mid = (lo + hi + 1) >> 1
        if blk_bits[mid] < p:
            lo = mid
        else:
            hi = mid - 1
    pos = blk_stream[lo]
    bits = blk_bits[lo]
    ones = blk_ones[lo]
    while bits < p:
        g, pos = _read_delta(words, pos)
        g -= 1
        if gaps_only:
            r = np.int64(1)
        else:
            r, pos = _read_delta(words, pos)
        if bits + g >= p:
            return ones
        bits += g
        if bits + r >= p:
            return ones + (p - bits)
        bits += r
        ones += r
        if ones >= total_ones:
            break
    return ones


@njit(cache=True)
def _pairs_select1(words, blk_stream, blk_bits, blk_ones, gaps_only, j):
    lo, hi = 0, blk_stream.shape[0] - 1
    while lo < hi:  # rightmost block with ones_before < j
        mid = (lo + hi + 1) >> 1
        if blk_ones[mid] < j:
            lo = mid
        else:
            hi = mid - 1
    pos = blk_stream[lo]
    bits = blk_bits[lo]
    ones = blk_ones[lo]
    while True:
        g, pos = _read_delta(words, pos)
        if gaps_only:
            r = np.int64(1)
        else:
            r, pos = _read_delta(words, pos)
        bits += g - 1
        if ones + r >= j:
            return bits + (j - ones)
        bits += r
        ones += r


def _runs_from_bits(bits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(gaps, runs) pairs for the maximal 1-runs of a bool array."""
    if bits.shape[0] == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    diffs = np.diff(bits.astype(np.int8))
    starts = np.flatnonzero(diffs == 1) + 1
    stops = np.flatnonzero(diffs == -1) + 1
    if bits[0]:
        starts = np.concatenate(([0], starts))
    if bits[-1]:
        stops = np.concatenate((stops, [bits.shape[0]]))
    runs = stops - starts
    prev_stops = np.concatenate(([0], stops[:-1]))
    gaps = starts - prev_stops
    return gaps.astype(np.int64), runs.astype(np.int64)


class _PairEncodedBitvector:
    """Shared machinery for the delta-coded run-length encodings."""

    _gaps_only = False

    def _init_pairs(self, gaps, runs, n, block_bits, block_mode):
        self.n = int(n)
        self.ones = int(runs.sum()) if runs.shape[0] else 0
        if gaps.shape[0]:
            (
                self.words,
                self.blk_stream,
                self.blk_bits,
                self.blk_ones,
                self.stream_bits,
            ) = _encode_pairs(gaps, runs, block_bits, block_mode, self._gaps_only)
        else:
            self.words = np.zeros(1, dtype=np.uint64)
            self.blk_stream = np.zeros(1, dtype=np.int64)
            self.blk_bits = np.zeros(1, dtype=np.int64)
            self.blk_ones = np.zeros(1, dtype=np.int64)
            self.stream_bits = 0

    def rank(self, sym: int, i: int) -> int:
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        if self.ones == 0:
            ones = 0
        else:
            ones = int(
                _pairs_rank1(
                    self.words, self.blk_stream, self.blk_bits, self.blk_ones,
                    self._gaps_only, i, self.n, self.ones,
                )
            )
        return ones if sym else i - ones

    def select(self, sym: int, j: int) -> int:
        if sym:
            if not 1 <= j <= self.ones:
                raise OutOfRangeError(f"select index {j} not in [1..{self.ones}]")
            return int(
                _pairs_select1(
                    self.words, self.blk_stream, self.blk_bits, self.blk_ones,
                    self._gaps_only, j,
                )
            )
        zeros = self.n - self.ones
        if not 1 <= j <= zeros:
            raise OutOfRangeError(f"select index {j} not in [1..{zeros}]")
        lo_p, hi_p = 1, self.n
        while lo_p < hi_p:
            mid = (lo_p + hi_p) >> 1
            if mid - self.rank(1, mid) >= j:
                hi_p = mid
            else:
                lo_p = mid + 1
        return lo_p

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        return self.rank(1, i) - self.rank(1, i - 1)

    def decode_bits(self) -> np.ndarray:
        bits = np.zeros(self.n, dtype=bool)
        for j in range(1, self.ones + 1):
            bits[self.select(1, j) - 1] = True
        return bits

    def size_in_bits(self) -> int:
        return self.stream_bits + 3 * 64 * self.blk_stream.shape[0] + 128


class RunLengthBitvector(_PairEncodedBitvector):
    """Delta-coded (gap, run) pairs, directory entry per 32 encoded bytes."""

    kind = "rle"

    def __init__(self, bits=None, gaps=None, runs=None, n=None, block_bytes=32):
        if bits is not None:
            bits = np.ascontiguousarray(bits, dtype=bool)
            gaps, runs = _runs_from_bits(bits)
            n = bits.shape[0]
        self._init_pairs(
            np.ascontiguousarray(gaps, dtype=np.int64),
            np.ascontiguousarray(runs, dtype=np.int64),
            n, block_bytes * 8, 0,
        )


class GapBitvector(_PairEncodedBitvector):
    """Delta-coded 0-run lengths only; every one is its own run."""

    kind = "gap"
    _gaps_only = True

    def __init__(self, bits=None, gaps=None, n=None, block_bytes=32):
        if bits is not None:
            bits = np.ascontiguousarray(bits, dtype=bool)
            positions = np.flatnonzero(bits)
            n = bits.shape[0]
            gaps = np.diff(np.concatenate(([-1], positions))) - 1
        gaps = np.ascontiguousarray(gaps, dtype=np.int64)
        self._init_pairs(gaps, np.ones(gaps.shape[0], dtype=np.int64), n, 32 * 8, 0)


class DeltaBlockBitvector(_PairEncodedBitvector):
    """Delta-coded runs in blocks of 128 ones (runs split at block edges)."""

    kind = "delta"

    def __init__(self, bits=None, gaps=None, runs=None, n=None, ones_per_block=128):
        if bits is not None:
            bits = np.ascontiguousarray(bits, dtype=bool)
            gaps, runs = _runs_from_bits(bits)
            n = bits.shape[0]
        gaps, runs = _split_runs(
            np.ascontiguousarray(gaps, dtype=np.int64),
            np.ascontiguousarray(runs, dtype=np.int64),
            ones_per_block,
        )
        self._init_pairs(gaps, runs, n, 0, ones_per_block)


@njit(cache=True)
def _split_runs(gaps, runs, limit):
    total = 0
    for k in range(runs.shape[0]):
        total += runs[k]
    # every run may straddle one boundary, plus one extra split per full block
    cap = gaps.shape[0] + total // limit + 2
    out_g = np.empty(cap, dtype=np.int64)
    out_r = np.empty(cap, dtype=np.int64)
    m = 0
    done = 0  # ones emitted so far
    for k in range(runs.shape[0]):
        g = gaps[k]
        r = runs[k]
        while r > 0:
            room = limit - (done % limit)
            take = r if r < room else room
            out_g[m] = g
            out_r[m] = take
            m += 1
            g = 0
            r -= take
            done += take
    return out_g[:m], out_r[:m]


class SparseRunBitvector:
    """1-runs as two sparse vectors: run starts (bit space) and cumulative
    ones at run ends (ones space)."""

    kind = "sparse-runs"

    def __init__(self, bits=None, gaps=None, runs=None, n=None):
        if bits is not None:
            bits = np.ascontiguousarray(bits, dtype=bool)
            gaps, runs = _runs_from_bits(bits)
            n = bits.shape[0]
        gaps = np.ascontiguousarray(gaps, dtype=np.int64)
        runs = np.ascontiguousarray(runs, dtype=np.int64)
        self.n = int(n)
        self.ones = int(runs.sum()) if runs.shape[0] else 0
        ends = np.cumsum(gaps + runs)
        starts = ends - runs  # 0-based positions of run starts
        self._starts = SparseBitvector(starts, max(self.n, 1))
        cum = np.cumsum(runs)  # cumulative ones at each run end
        self._cum = SparseBitvector(cum - 1, max(self.ones, 1))

    def _run_bounds(self, r: int) -> tuple[int, int]:
        """(start position, ones before run) of the r-th run, 1-based r."""
        start = self._starts.select(1, r)
        before = self._cum.select(1, r - 1) if r > 1 else 0
        return start, before

    def rank(self, sym: int, i: int) -> int:
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        if self.ones == 0 or i == 0:
            ones = 0
        else:
            r = self._starts.rank(1, i)
            if r == 0:
                ones = 0
            else:
                start, before = self._run_bounds(r)
                length = self._cum.select(1, r) - before
                ones = before + min(i - start + 1, length)
        return ones if sym else i - ones

    def select(self, sym: int, j: int) -> int:
        if sym:
            if not 1 <= j <= self.ones:
                raise OutOfRangeError(f"select index {j} not in [1..{self.ones}]")
            r = self._cum.rank(1, j - 1) + 1
            start, before = self._run_bounds(r)
            return start + (j - before - 1)
        zeros = self.n - self.ones
        if not 1 <= j <= zeros:
            raise OutOfRangeError(f"select index {j} not in [1..{zeros}]")
        lo_p, hi_p = 1, self.n
        while lo_p < hi_p:
            mid = (lo_p + hi_p) >> 1
            if mid - self.rank(1, mid) >= j:
                hi_p = mid
            else:
                lo_p = mid + 1
        return lo_p

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        return self.rank(1, i) - self.rank(1, i - 1)

    def decode_bits(self) -> np.ndarray:
        bits = np.zeros(self.n, dtype=bool)
        for j in range(1, self.ones + 1):
            bits[self.select(1, j) - 1] = True
        return bits

    def size_in_bits(self) -> int:
        return self._starts.size_in_bits() + self._cum.size_in_bits() + 128


class GrammarBitvector:
    """Grammar-compressed bitvector: pair replacement over the 0-run lengths.

    The 0-run before each one is a token; repeated adjacent token pairs become
    rules. Select walks the rule tree using per-rule (ones, zeros) totals.
    """

    kind = "grammar"

    def __init__(self, bits=None, gaps=None, n=None):
        from .. import repair

        if bits is not None:
            bits = np.ascontiguousarray(bits, dtype=bool)
            positions = np.flatnonzero(bits)
            n = bits.shape[0]
            gaps = np.diff(np.concatenate(([-1], positions))) - 1
        gaps = np.ascontiguousarray(gaps, dtype=np.int64)
        self.n = int(n)
        self.ones = int(gaps.shape[0])
        if self.ones:
            values, dense = np.unique(gaps, return_inverse=True)
        else:
            values = np.empty(0, dtype=np.int64)
            dense = np.empty(0, dtype=np.int64)
        self.values = values.astype(np.int64)
        nterm = max(int(values.shape[0]), 1)
        seqs, rules = repair.compress_sequences([dense.astype(np.int32)], nterm)
        self.tokens = seqs[0].astype(np.int64)
        self.rules = rules.astype(np.int64).reshape(-1, 2)
        self.nterm = nterm
        nr = self.rules.shape[0]
        self.rule_ones = np.zeros(nr, dtype=np.int64)
        self.rule_zeros = np.zeros(nr, dtype=np.int64)
        for rid in range(nr):
            for t in self.rules[rid]:
                if t < nterm:
                    self.rule_ones[rid] += 1
                    self.rule_zeros[rid] += int(self.values[t])
                else:
                    self.rule_ones[rid] += self.rule_ones[t - nterm]
                    self.rule_zeros[rid] += self.rule_zeros[t - nterm]
        tok_ones = np.empty(self.tokens.shape[0], dtype=np.int64)
        tok_bits = np.empty(self.tokens.shape[0], dtype=np.int64)
        for idx, t in enumerate(self.tokens):
            if t < nterm:
                tok_ones[idx] = 1
                tok_bits[idx] = 1 + int(self.values[t])
            else:
                tok_ones[idx] = self.rule_ones[t - nterm]
                tok_bits[idx] = tok_ones[idx] + self.rule_zeros[t - nterm]
        self.cum_ones = np.concatenate(([0], np.cumsum(tok_ones))).astype(np.int64)
        self.cum_bits = np.concatenate(([0], np.cumsum(tok_bits))).astype(np.int64)

    def select(self, sym: int, j: int) -> int:
        if sym != 1:
            raise OutOfRangeError("select0 unsupported on the grammar encoding")
        if not 1 <= j <= self.ones:
            raise OutOfRangeError(f"select index {j} not in [1..{self.ones}]")
        return int(
            _grammar_select1(
                self.tokens, self.cum_ones, self.cum_bits, self.rules,
                self.rule_ones, self.rule_zeros, self.values, self.nterm, j,
            )
        )

    def rank(self, sym: int, i: int) -> int:
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        lo_j, hi_j = 0, self.ones
        while lo_j < hi_j:
            mid = (lo_j + hi_j + 1) >> 1
            if self.select(1, mid) <= i:
                lo_j = mid
            else:
                hi_j = mid - 1
        return lo_j if sym else i - lo_j

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        return self.rank(1, i) - self.rank(1, i - 1)

    def decode_bits(self) -> np.ndarray:
        bits = np.zeros(self.n, dtype=bool)
        for j in range(1, self.ones + 1):
            bits[self.select(1, j) - 1] = True
        return bits

    def size_in_bits(self) -> int:
        nsym = self.nterm + self.rules.shape[0]
        w = max(int(nsym - 1).bit_length(), 1)
        vw = max(int(self.values.max() if self.values.shape[0] else 0).bit_length(), 1)
        samples = max(self.tokens.shape[0] // 64, 1)  # nominal sampled prefix sums
        return (
            self.tokens.shape[0] * w
            + self.rules.shape[0] * 2 * w
            + self.values.shape[0] * vw
            + samples * 128
            + 128
        )


@njit(cache=True)
def _grammar_select1(tokens, cum_ones, cum_bits, rules, rule_ones, rule_zeros, values, nterm, j):
    lo, hi = 0, tokens.shape[0] - 1
    while lo < hi:  # rightmost token with cum_ones < j
        mid = (lo + hi + 1) >> 1
        if cum_ones[mid] < j:
            lo = mid
        else:
            hi = mid - 1
    t = tokens[lo]
    need = j - cum_ones[lo]
    pos = cum_bits[lo]
    while t >= nterm:
        rid = t - nterm
        a = rules[rid, 0]
        if a < nterm:
            a_ones = 1
            a_bits = 1 + values[a]
        else:
            a_ones = rule_ones[a - nterm]
            a_bits = a_ones + rule_zeros[a - nterm]
        if need <= a_ones:
            t = a
        else:
            need -= a_ones
            pos += a_bits
            t = rules[rid, 1]
    return pos + values[t] + 1  # need == 1 once t is a terminal


BITVECTOR_KINDS = {
    "plain": PlainBitvector,
    "sparse": SparseBitvector,
    "rle": RunLengthBitvector,
    "gap": GapBitvector,
    "delta": DeltaBlockBitvector,
    "sparse-runs": SparseRunBitvector,
    "grammar": GrammarBitvector,
}


def bitvector_from_bits(kind: str, bits):
    if kind == "sparse":
        return SparseBitvector.from_bits(bits)
    return BITVECTOR_KINDS[kind](bits)
