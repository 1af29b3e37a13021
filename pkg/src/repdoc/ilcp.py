"""Interleaved per-document LCP index: document listing and counting.

Each document's own LCP array is spliced into global suffix-array order, so
the k-th suffix of document j (in lexicographic order) carries that
document's k-th LCP entry. Values below the pattern length mark exactly the
leftmost occurrence of each distinct document inside a match range, and on
repetitive collections the interleaved array has few runs of equal values,
which is what the index stores.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .corpus import Collection, LexRange, SuffixOracle
from .succinct import RmqIndex, SparseBitvector, WaveletTree


@njit(cache=True)
def _interleave_doc_lcps(text, sa, da, doc_starts, d):
    n = sa.shape[0]
    counts = np.zeros(d + 1, dtype=np.int64)
    for i in range(n):
        counts[da[i]] += 1
    offsets = np.zeros(d + 2, dtype=np.int64)
    for j in range(1, d + 2):
        offsets[j] = offsets[j - 1] + counts[j - 1]
    fill = offsets.copy()
    local_sa = np.empty(n, dtype=np.int64)
    back = np.empty(n, dtype=np.int64)
    for i in range(n):
        j = da[i]
        k = fill[j]
        local_sa[k] = sa[i] - doc_starts[j - 1]
        back[i] = k
        fill[j] += 1
    # Kasai per document over its own slice (terminator unique in-document)
    lcps = np.zeros(n, dtype=np.int32)
    rank = np.empty(n, dtype=np.int64)
    for j in range(1, d + 1):
        base = offsets[j]
        ln = counts[j]
        start = doc_starts[j - 1]
        for k in range(ln):
            rank[local_sa[base + k]] = k
        h = 0
        for p in range(ln):
            r = rank[p]
            if r > 0:
                q = local_sa[base + r - 1]
                while p + h < ln and q + h < ln and text[start + p + h] == text[start + q + h]:
                    h += 1
                lcps[base + r] = h
                if h > 0:
                    h -= 1
            else:
                h = 0
    ilcp = np.empty(n, dtype=np.int32)
    for i in range(n):
        ilcp[i] = lcps[back[i]]
    return ilcp


def build_ilcp(collection: Collection, oracle: SuffixOracle) -> np.ndarray:
    """The interleaved LCP array, aligned with suffix-array slots (0-based)."""
    return _interleave_doc_lcps(
        collection.text,
        oracle.sa.astype(np.int64),
        oracle.document_array().astype(np.int64),
        collection.doc_starts,
        collection.d,
    )


def count_ilcp_runs(ilcp: np.ndarray) -> int:
    """Number of maximal runs of equal values."""
    n = int(ilcp.shape[0])
    if n == 0:
        return 0
    return 1 + int(np.count_nonzero(ilcp[1:] != ilcp[:-1]))


class IlcpIndex:
    """Run-length representation of the interleaved LCP array.

    run_values lives in a skewed wavelet tree; run_starts marks run heads in
    suffix-array space; leaf_runs re-groups the runs by value (left-to-right
    within each value) so counting can measure whole spans per wavelet leaf.
    """

    def __init__(self, ilcp: np.ndarray, wavelet_bitvector: str = "plain"):
        ilcp = np.ascontiguousarray(ilcp, dtype=np.int64)
        self.n = int(ilcp.shape[0])
        if self.n == 0:
            raise ValueError("empty interleaved LCP array")
        change = np.flatnonzero(np.diff(ilcp) != 0) + 1
        starts = np.concatenate(([0], change))
        self.rho = int(starts.shape[0])
        self.run_values_raw = ilcp[starts]
        lengths = np.diff(np.concatenate((starts, [self.n])))
        self.max_value = int(ilcp.max())
        self.run_starts = SparseBitvector(starts, self.n)
        self.values_tree = WaveletTree(
            self.run_values_raw, shape="skewed", bitvector=wavelet_bitvector
        )
        self.rmq = RmqIndex(self.run_values_raw)
        # leaf_runs: runs bucketed by value, original order kept inside a value
        order = np.argsort(self.run_values_raw, kind="stable")
        grouped_lengths = lengths[order]
        leaf_starts = np.concatenate(([0], np.cumsum(grouped_lengths)[:-1]))
        self.leaf_runs = SparseBitvector(leaf_starts, self.n)
        # runs with value < v occupy global leaf-run slots [1 .. value_offsets[v]]
        counts = np.bincount(self.run_values_raw, minlength=self.max_value + 2)
        self.value_offsets = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)

    def run_start(self, idx: int) -> int:
        """1-based start position of run idx; rho+1 maps past the end."""
        if idx == self.rho + 1:
            return self.n + 1
        return self.run_starts.select(1, idx)

    def leaf_run_start(self, idx: int) -> int:
        if idx == self.rho + 1:
            return self.n + 1
        return self.leaf_runs.select(1, idx)

    def size_in_bits(self) -> int:
        return (
            self.run_starts.size_in_bits()
            + self.leaf_runs.size_in_bits()
            + self.values_tree.size_in_bits()
            + self.rmq.size_in_bits()
            + self.value_offsets.shape[0] * 64
        )


def build_ilcp_index(ilcp: np.ndarray, wavelet_bitvector: str = "plain") -> IlcpIndex:
    return IlcpIndex(ilcp, wavelet_bitvector=wavelet_bitvector)


def ilcp_list(index: IlcpIndex, oracle: SuffixOracle, rng: LexRange,
              m: int | None = None) -> list[int]:
    """Distinct documents in a match range, in discovery order.

    The pattern length m is implied by the range and not consulted: the
    run-minimum recursion with already-reported marking stops by itself.
    """
    if rng.is_empty:
        return []
    da = oracle.document_array()
    lo, hi = rng.lo, rng.hi
    l1 = index.run_starts.rank(1, lo)
    r1 = index.run_starts.rank(1, hi)
    seen = np.zeros(oracle.collection.d + 1, dtype=bool)
    out: list[int] = []
    stack = [(l1, r1)]
    while stack:
        left, right = stack.pop()
        if left > right:
            continue
        mid = index.rmq.query(left, right)
        i = max(lo, index.run_start(mid))
        j = min(hi, index.run_start(mid + 1) - 1)
        aborted = False
        for k in range(i, j + 1):
            g = int(da[k - 1])
            if seen[g]:
                aborted = True
                break
            seen[g] = True
            out.append(g)
        if not aborted:
            stack.append((mid + 1, right))
            stack.append((left, mid - 1))
    return out


def ilcp_count(index: IlcpIndex, rng: LexRange, m: int) -> int:
    """Number of distinct documents containing the (length-m) pattern whose
    match range is rng: entries below m in the interleaved LCP restricted to
    the range, summed as whole runs per wavelet leaf and corrected at the
    two boundary runs."""
    if rng.is_empty or m <= 0:
        return 0
    lo, hi = rng.lo, rng.hi
    l1 = index.run_starts.rank(1, lo)
    r1 = index.run_starts.rank(1, hi)
    count = _count_small(index, index.values_tree.root, l1, r1, m)
    first_val = index.values_tree.access(l1)
    if first_val < m:
        count -= lo - index.run_start(l1)
    if r1 != l1:
        last_val = index.values_tree.access(r1)
    else:
        last_val = first_val
    if last_val < m:
        count -= index.run_start(r1 + 1) - 1 - hi
    return int(count)


def _count_small(index: IlcpIndex, node, left: int, right: int, m: int) -> int:
    """Total length spanned by runs left..right whose value is < m, within
    the wavelet subtree at node."""
    if left > right or node.lo >= m:
        return 0
    if node.is_leaf:
        off = int(index.value_offsets[node.lo])
        return index.leaf_run_start(off + right + 1) - index.leaf_run_start(off + left)
    ones_l = node.bv.rank(1, left - 1)
    ones_r = node.bv.rank(1, right)
    total = _count_small(index, node.left, left - ones_l, right - ones_r, m)
    total += _count_small(index, node.right, ones_l + 1, ones_r, m)
    return total
