"""Wavelet trees over non-negative integer sequences.

Two shapes: `balanced` (midpoint alphabet splits) and `skewed`, where the
leftmost value sits at depth 1, the next two at depth 3, the next four at
depth 5, and so on. The skewed shape makes queries that only touch the m
smallest values visit O(m) nodes. Subtrees whose value interval does not
occur in the sequence are pruned.
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidParamError, OutOfRangeError
from .bits import bitvector_from_bits


def _split_interval(lo: int, hi: int, skewed: bool) -> int:
    """Last value going to the left child of a node covering [lo..hi]."""
    if not skewed:
        return (lo + hi) // 2
    if lo == 0:
        return 0
    # leaf indexes are value+1; group [2^{k-1} .. 2^k - 1] hangs off the spine
    leaf = lo + 1
    group_hi = 2 * leaf - 2  # value of the last leaf in this group
    if group_hi < hi:
        return group_hi
    return (lo + hi) // 2


class _Node:
    __slots__ = ("lo", "hi", "bv", "left", "right")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi
        self.bv = None
        self.left = None
        self.right = None

    @property
    def is_leaf(self):
        return self.bv is None


class WaveletTree:
    """Access / rank / select over a sequence, built once."""

    def __init__(self, seq, shape: str = "balanced", bitvector: str = "plain"):
        seq = np.ascontiguousarray(seq, dtype=np.int64)
        if seq.shape[0] == 0:
            raise InvalidParamError("cannot build a wavelet tree over an empty sequence")
        if seq.min() < 0:
            raise InvalidParamError("symbols must be non-negative")
        if shape not in ("balanced", "skewed"):
            raise InvalidParamError(f"unknown shape {shape!r}")
        self.n = int(seq.shape[0])
        self.shape = shape
        self.max_value = int(seq.max())
        self._bv_kind = bitvector
        self.root = self._build(seq, 0, self.max_value, shape == "skewed")

    def _build(self, seq, lo, hi, skewed):
        node = _Node(lo, hi)
        if lo == hi:
            return node
        split = _split_interval(lo, hi, skewed)
        right = seq > split
        if not right.any():
            return self._build(seq, lo, split, skewed)
        if right.all():
            return self._build(seq, split + 1, hi, skewed)
        node.bv = bitvector_from_bits(self._bv_kind, right)
        node.left = self._build(seq[~right], lo, split, skewed)
        node.right = self._build(seq[right], split + 1, hi, skewed)
        return node

    def access(self, i: int) -> int:
        """Symbol at 1-based position i."""
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} not in [1..{self.n}]")
        node = self.root
        while not node.is_leaf:
            if node.bv.access(i):
                i = node.bv.rank(1, i)
                node = node.right
            else:
                i = node.bv.rank(0, i)
                node = node.left
        return node.lo

    def rank(self, sym: int, i: int) -> int:
        """Occurrences of sym among the first i positions."""
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"rank position {i} not in [0..{self.n}]")
        if sym < 0 or sym > self.max_value:
            return 0
        node = self.root
        while not node.is_leaf:
            if sym > node.left.hi:
                i = node.bv.rank(1, i)
                node = node.right
            else:
                i = node.bv.rank(0, i)
                node = node.left
            if i == 0:
                return 0
        return i if node.lo == sym else 0

    def select(self, sym: int, j: int) -> int:
        """1-based position of the j-th occurrence of sym."""
        if j < 1:
            raise OutOfRangeError("select index must be positive")
        pos = self._select(self.root, sym, j)
        if pos is None:
            raise OutOfRangeError(f"symbol {sym} has fewer than {j} occurrences")
        return pos

    def _select(self, node, sym, j):
        if node.is_leaf:
            if node.lo != sym:
                return None
            return j
        goes_right = sym > node.left.hi
        child = node.right if goes_right else node.left
        if not node.lo <= sym <= node.hi:
            return None
        inner = self._select(child, sym, j)
        if inner is None:
            return None
        bit = 1 if goes_right else 0
        if inner > (node.bv.ones if bit else node.bv.n - node.bv.ones):
            return None
        return node.bv.select(bit, inner)

    def decode(self) -> np.ndarray:
        return np.fromiter((self.access(i) for i in range(1, self.n + 1)), dtype=np.int64)

    def leaf_depths(self) -> dict[int, int]:
        """Depth of each present symbol's leaf (root = depth 0)."""
        depths: dict[int, int] = {}
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            if node.is_leaf:
                depths[node.lo] = depth
            else:
                stack.append((node.left, depth + 1))
                stack.append((node.right, depth + 1))
        return depths

    def size_in_bits(self) -> int:
        total = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                total += node.bv.size_in_bits()
                stack.append(node.left)
                stack.append(node.right)
        return total + 128


def wt_build(seq, shape: str = "balanced", bitvector: str = "plain") -> WaveletTree:
    return WaveletTree(seq, shape=shape, bitvector=bitvector)
