"""Suffix array construction (SA-IS) over integer alphabets.

Induced-sorting passes are numba-compiled; the recursion on the reduced
problem is orchestrated from Python (depth is O(log n)).
"""

from __future__ import annotations

import numpy as np
from numba import njit

_L = 0
_S = 1


@njit(cache=True)
def _build_types(s):
    n = s.shape[0]
    t = np.empty(n + 1, dtype=np.uint8)
    t[n] = _S  # virtual sentinel, smaller than every symbol
    if n == 0:
        return t
    t[n - 1] = _L
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1]:
            t[i] = _S
        elif s[i] > s[i + 1]:
            t[i] = _L
        else:
            t[i] = t[i + 1]
    return t


@njit(cache=True)
def _bucket_sizes(s, k):
    sizes = np.zeros(k, dtype=np.int64)
    for i in range(s.shape[0]):
        sizes[s[i]] += 1
    return sizes


@njit(cache=True)
def _seed_guess_lms(s, sa, sizes, t):
    tails = np.empty(sizes.shape[0], dtype=np.int64)
    acc = 1
    for c in range(sizes.shape[0]):
        acc += sizes[c]
        tails[c] = acc - 1
    for i in range(s.shape[0]):
        if i > 0 and t[i] == _S and t[i - 1] == _L:
            c = s[i]
            sa[tails[c]] = i
            tails[c] -= 1
    sa[0] = s.shape[0]


@njit(cache=True)
def _induce(s, sa, sizes, t):
    k = sizes.shape[0]
    heads = np.empty(k, dtype=np.int64)
    acc = 1
    for c in range(k):
        heads[c] = acc
        acc += sizes[c]
    for i in range(sa.shape[0]):
        j = sa[i] - 1
        if j >= 0 and t[j] == _L:
            c = s[j]
            sa[heads[c]] = j
            heads[c] += 1
    tails = np.empty(k, dtype=np.int64)
    acc = 1
    for c in range(k):
        acc += sizes[c]
        tails[c] = acc - 1
    for i in range(sa.shape[0] - 1, -1, -1):
        j = sa[i] - 1
        if j >= 0 and t[j] == _S:
            c = s[j]
            sa[tails[c]] = j
            tails[c] -= 1


@njit(cache=True)
def _name_lms(s, sa, t):
    """Name sorted LMS substrings; returns (names per position, name count)."""
    n = s.shape[0]
    names = np.full(n + 1, -1, dtype=np.int64)
    current = 0
    names[n] = 0
    last = n
    for i in range(1, n + 1):
        pos = sa[i]
        if pos <= 0 or pos == n or t[pos] != _S or t[pos - 1] != _L:
            continue
        # compare LMS substring at pos against the previous one at last
        equal = last != n
        if equal:
            off = 0
            while True:
                a_lms = off > 0 and t[last + off] == _S and t[last + off - 1] == _L
                b_lms = off > 0 and t[pos + off] == _S and t[pos + off - 1] == _L
                if off > 0 and a_lms and b_lms:
                    break
                if a_lms != b_lms or last + off >= n or pos + off >= n:
                    equal = False
                    break
                if s[last + off] != s[pos + off]:
                    equal = False
                    break
                off += 1
        if not equal:
            current += 1
        names[pos] = current
        last = pos
    return names, current + 1


@njit(cache=True)
def _seed_sorted_lms(s, sa, sizes, reduced_sa, offsets):
    tails = np.empty(sizes.shape[0], dtype=np.int64)
    acc = 1
    for c in range(sizes.shape[0]):
        acc += sizes[c]
        tails[c] = acc - 1
    for i in range(reduced_sa.shape[0] - 1, 1, -1):
        pos = offsets[reduced_sa[i]]
        c = s[pos]
        sa[tails[c]] = pos
        tails[c] -= 1
    sa[0] = s.shape[0]


def _sais(s: np.ndarray, k: int) -> np.ndarray:
    """SA (length n+1, including the virtual empty suffix at slot 0)."""
    n = s.shape[0]
    t = _build_types(s)
    sizes = _bucket_sizes(s, k)
    sa = np.full(n + 1, -1, dtype=np.int64)
    _seed_guess_lms(s, sa, sizes, t)
    _induce(s, sa, sizes, t)

    names, name_count = _name_lms(s, sa, t)
    lms_mask = names >= 0
    offsets = np.flatnonzero(lms_mask).astype(np.int64)
    reduced = names[lms_mask]
    if name_count < reduced.shape[0]:
        reduced_sa = _sais(reduced, name_count)
    else:
        # all names distinct: invert directly (slot 0 = reduced empty suffix)
        reduced_sa = np.empty(reduced.shape[0] + 1, dtype=np.int64)
        reduced_sa[0] = reduced.shape[0]
        reduced_sa[reduced + 1] = np.arange(reduced.shape[0], dtype=np.int64)

    sa.fill(-1)
    _seed_sorted_lms(s, sa, sizes, reduced_sa, offsets)
    _induce(s, sa, sizes, t)
    return sa


def suffix_array(s: np.ndarray, alphabet_size: int | None = None) -> np.ndarray:
    """Suffix array of an integer sequence, as 0-based positions (int32).

    Symbols must be non-negative. Ties are impossible only if the caller
    guarantees them (e.g. via a unique smallest final symbol); otherwise the
    full suffixes decide, which SA-IS handles regardless.
    """
    s = np.ascontiguousarray(s, dtype=np.int64)
    if s.shape[0] == 0:
        return np.empty(0, dtype=np.int32)
    if alphabet_size is None:
        alphabet_size = int(s.max()) + 1
    return _sais(s, alphabet_size)[1:].astype(np.int32)
