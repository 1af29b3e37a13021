"""Brute-force and classic first-occurrence document listing.

These serve both as benchmark baselines and as oracles for the compressed
indexes: the locate-based and document-array-based brute listings, brute
top-k, and the previous-occurrence listing recursion in its comparison form
(explicit array, kept for tests) and its marking form.
"""

from __future__ import annotations

import numpy as np

from .corpus import LexRange, SuffixOracle
from .succinct import RmqIndex


def brute_list_locate(oracle: SuffixOracle, rng: LexRange) -> set[int]:
    """Distinct documents by locating every suffix in the range."""
    if rng.is_empty:
        return set()
    positions = oracle.locate(rng)
    starts = oracle.collection.doc_starts
    docs = np.searchsorted(starts, positions - 1, side="right")
    return set(int(x) for x in np.unique(docs))


def brute_list_da(da: np.ndarray, rng: LexRange) -> set[int]:
    """Distinct documents over a materialized document array."""
    if rng.is_empty:
        return set()
    return set(int(x) for x in np.unique(da[rng.as_slice()]))


def brute_topk(da: np.ndarray, rng: LexRange, k: int) -> list[tuple[int, int]]:
    """k most frequent documents in the range, ties by smaller id."""
    if rng.is_empty:
        return []
    docs, counts = np.unique(da[rng.as_slice()], return_counts=True)
    perm = np.lexsort((docs, -counts))
    return [(int(docs[i]), int(counts[i])) for i in perm[:k]]


def prev_occurrence_array(da: np.ndarray) -> np.ndarray:
    """C[i] = largest 1-based h < i+1 with da[h-1] == da[i], else 0."""
    n = da.shape[0]
    c = np.zeros(n, dtype=np.int64)
    last: dict[int, int] = {}
    for i in range(n):
        doc = int(da[i])
        c[i] = last.get(doc, 0)
        last[doc] = i + 1
    return c


def build_prev_rmq(c: np.ndarray) -> RmqIndex:
    return RmqIndex(c)


def sada_list_prev(c: np.ndarray, rmq_c: RmqIndex, da: np.ndarray,
                   rng: LexRange) -> list[int]:
    """First-occurrence listing with explicit comparisons against the array.

    Test-form: recursion stops where the previous occurrence falls inside
    the query range.
    """
    if rng.is_empty:
        return []
    lo = rng.lo
    out: list[int] = []
    stack = [(rng.lo, rng.hi)]
    while stack:
        left, right = stack.pop()
        if left > right:
            continue
        k = rmq_c.query(left, right)
        if c[k - 1] >= lo:
            continue
        out.append(int(da[k - 1]))
        stack.append((k + 1, right))
        stack.append((left, k - 1))
    return out


def sada_list_marking(rmq_c: RmqIndex, oracle: SuffixOracle, rng: LexRange,
                      use_doc_array: bool = True) -> list[int]:
    """First-occurrence listing with already-reported marking.

    The range-minimum structure is queried over the previous-occurrence
    values without reading them; reported documents are marked and a marked
    hit prunes the whole subrange. With use_doc_array the document ids come
    from the materialized array, otherwise each one is located through the
    suffix array.
    """
    if rng.is_empty:
        return []
    da = oracle.document_array() if use_doc_array else None
    starts = oracle.collection.doc_starts
    seen = np.zeros(oracle.collection.d + 1, dtype=bool)
    out: list[int] = []
    stack = [(rng.lo, rng.hi)]
    while stack:
        left, right = stack.pop()
        if left > right:
            continue
        k = rmq_c.query(left, right)
        if da is not None:
            doc = int(da[k - 1])
        else:
            doc = int(np.searchsorted(starts, int(oracle.sa[k - 1]), side="right"))
        if seen[doc]:
            continue
        seen[doc] = True
        out.append(doc)
        stack.append((k + 1, right))
        stack.append((left, k - 1))
    return out
