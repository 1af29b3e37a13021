"""Shared suffix-tree machinery on top of (SA, LCP).

The suffix tree is never materialized with pointers: internal nodes are the
lcp-intervals of the global LCP array, visited with a monotone stack. The
multi-ary tree is treated as binarized into left-leaning chains; the binary
node sitting between leaves s and s+1 (slot s, 0-based) is the chain node of
the enclosing interval whose value equals LCP[s+1].
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def kasai_lcp(keys, sa):
    """LCP array: lcp[i] = lcp(suffix sa[i-1], suffix sa[i]); lcp[0] = 0."""
    n = sa.shape[0]
    lcp = np.zeros(n, dtype=np.int32)
    rank = np.empty(n, dtype=np.int32)
    for i in range(n):
        rank[sa[i]] = i
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and keys[i + h] == keys[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


@njit(cache=True)
def redundancy_sweep(lcp, da, d):
    """Redundancy counts of the binarized suffix tree, one pass over the LCP.

    For every node v, the number of adjacent same-document leaf pairs whose
    lowest common binary ancestor lies in v's chain is summed and stored at
    v's last chain slot (the reordering that moves all of a node's chain
    weight to one cell). Returns:

    h        int64[n-1]  reordered per-slot sums,
    h_filt   int64[n-1]  like h, but only pairs whose chain node covers
                         more than one distinct document,
    multi    bool[n-1]   per slot: the binary node there spans >1 document.
    """
    n = da.shape[0]
    slots = max(n - 1, 0)
    h = np.zeros(slots, dtype=np.int64)
    h_filt = np.zeros(slots, dtype=np.int64)
    multi = np.zeros(slots, dtype=np.bool_)
    if n <= 1:
        return h, h_filt, multi

    # prefix counts of adjacent document changes: leaves [a..e] span more
    # than one document iff ddcum[e] > ddcum[a]
    ddcum = np.zeros(n, dtype=np.int64)
    for i in range(1, n):
        ddcum[i] = ddcum[i - 1] + (1 if da[i] != da[i - 1] else 0)

    st_val = np.empty(n, dtype=np.int64)
    st_lb = np.empty(n, dtype=np.int64)
    st_head = np.empty(n, dtype=np.int64)
    top = 0

    bnd_slot = np.empty(slots, dtype=np.int64)
    bnd_pairs = np.zeros(slots, dtype=np.int64)
    bnd_prev = np.empty(slots, dtype=np.int64)
    nbnd = 0

    prev_occ = np.full(d + 1, -1, dtype=np.int64)
    prev_occ[da[0]] = 0

    for i in range(1, n + 1):
        val = np.int64(lcp[i]) if i < n else np.int64(-1)
        new_lb = i - 1
        while top > 0 and st_val[top - 1] > val:
            # close the node on top of the stack; its extent is [lb .. i-1]
            lb = st_lb[top - 1]
            cur = st_head[top - 1]
            top_slot = bnd_slot[cur]
            span_end = i - 1
            total = np.int64(0)
            filt = np.int64(0)
            while cur >= 0:
                s = bnd_slot[cur]
                is_multi = ddcum[span_end] > ddcum[lb]
                multi[s] = is_multi
                total += bnd_pairs[cur]
                if is_multi:
                    filt += bnd_pairs[cur]
                span_end = s
                cur = bnd_prev[cur]
            h[top_slot] += total
            h_filt[top_slot] += filt
            new_lb = lb
            top -= 1
        if i == n:
            break
        if top > 0 and st_val[top - 1] == val:
            bnd_slot[nbnd] = i - 1
            bnd_prev[nbnd] = st_head[top - 1]
            st_head[top - 1] = nbnd
            nbnd += 1
        else:
            st_val[top] = val
            st_lb[top] = new_lb
            bnd_slot[nbnd] = i - 1
            bnd_prev[nbnd] = -1
            st_head[top] = nbnd
            nbnd += 1
            top += 1
        # adjacent same-document pair ending at leaf i
        doc = da[i]
        x1 = prev_occ[doc]
        if x1 >= 0:
            lo, hi = 0, top - 1
            while lo < hi:  # deepest open node whose left end covers x1
                mid = (lo + hi + 1) >> 1
                if st_lb[mid] <= x1:
                    lo = mid
                else:
                    hi = mid - 1
            bnd_pairs[st_head[lo]] += 1
        prev_occ[doc] = i
    return h, h_filt, multi


@njit(cache=True)
def _enumerate_nodes(lcp, n):
    """lcp-interval tree nodes in close order.

    Returns (values, lb, rb, parent) with parent as an index into these same
    arrays (-1 for the last-closed, outermost node).
    """
    max_nodes = max(n - 1, 1)
    out_val = np.empty(max_nodes, dtype=np.int64)
    out_lb = np.empty(max_nodes, dtype=np.int64)
    out_rb = np.empty(max_nodes, dtype=np.int64)
    out_parent = np.full(max_nodes, -1, dtype=np.int64)
    nout = 0

    st_val = np.empty(n + 1, dtype=np.int64)
    st_lb = np.empty(n + 1, dtype=np.int64)
    st_push = np.empty(n + 1, dtype=np.int64)  # push id per open node
    push_close = np.full(max_nodes + 1, -1, dtype=np.int64)  # push id -> close idx
    pending_parent = np.full(max_nodes + 1, -1, dtype=np.int64)  # close idx -> parent push id
    top = 0
    npush = 0

    for i in range(1, n + 1):
        val = np.int64(lcp[i]) if i < n else np.int64(-1)
        new_lb = i - 1
        last_closed = -1
        while top > 0 and st_val[top - 1] > val:
            lb = st_lb[top - 1]
            out_val[nout] = st_val[top - 1]
            out_lb[nout] = lb
            out_rb[nout] = i - 1
            push_close[st_push[top - 1]] = nout
            top -= 1
            if top > 0 and st_val[top - 1] > val:
                # another pop follows: the node below is the parent
                pending_parent[nout] = st_push[top - 1]
            else:
                last_closed = nout
            nout += 1
            new_lb = lb
        if i == n:
            break
        if top > 0 and st_val[top - 1] == val:
            merge_push = st_push[top - 1]
        else:
            st_val[top] = val
            st_lb[top] = new_lb
            st_push[top] = npush
            merge_push = npush
            npush += 1
            top += 1
        if last_closed >= 0:
            pending_parent[last_closed] = merge_push
    for k in range(nout):
        p = pending_parent[k]
        if p >= 0:
            out_parent[k] = push_close[p]
    return out_val[:nout], out_lb[:nout], out_rb[:nout], out_parent[:nout]


class NodeTable:
    """Internal suffix-tree nodes as flat arrays, children before parents."""

    def __init__(self, values, lb, rb, parent):
        self.values = values
        self.lb = lb
        self.rb = rb
        self.parent = parent
        self.count = int(values.shape[0])

    def children_lists(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.count)]
        for idx in range(self.count):
            p = int(self.parent[idx])
            if p >= 0:
                kids[p].append(idx)
        for lst in kids:
            lst.sort(key=lambda k: int(self.lb[k]))
        return kids


def enumerate_nodes(lcp: np.ndarray) -> NodeTable:
    """All internal nodes (intervals of >= 2 suffixes) of the suffix tree."""
    n = int(lcp.shape[0])
    if n <= 1:
        empty = np.empty(0, dtype=np.int64)
        return NodeTable(empty, empty.copy(), empty.copy(), empty.copy())
    values, lb, rb, parent = _enumerate_nodes(lcp.astype(np.int64), n)
    return NodeTable(values, lb, rb, parent)


def pattern_node_ranges(lcp: np.ndarray, keys: np.ndarray, sa: np.ndarray,
                        terminator_bound: int) -> list[tuple[int, int, int, int]]:
    """(lb, rb, min_len, max_len) per pattern locus, 0-based intervals.

    Exhaustive-test helper: the search for any terminator-free pattern P
    yields exactly one of these intervals, with len(P) inside the entry's
    length span; conversely every entry is reached by some P. Covers both
    internal nodes and single-suffix loci.
    """
    n = int(sa.shape[0])
    table = enumerate_nodes(lcp)
    out = []
    for idx in range(table.count):
        lb = int(table.lb[idx])
        rb = int(table.rb[idx])
        depth = int(table.values[idx])
        p = int(table.parent[idx])
        parent_depth = int(table.values[p]) if p >= 0 else 0
        if depth == 0:
            continue
        start = int(sa[lb])
        limit = depth
        for off in range(depth):
            if keys[start + off] < terminator_bound:
                limit = off
                break
        if limit <= parent_depth:
            continue
        out.append((lb, rb, parent_depth + 1, limit))
    # single-suffix loci: patterns longer than the enclosing node's depth
    lcp_pad = np.concatenate((lcp.astype(np.int64), [0]))
    for i in range(n):
        parent_depth = int(max(lcp_pad[i] if i > 0 else 0, lcp_pad[i + 1]))
        start = int(sa[i])
        limit = 0
        for off in range(n - start):
            if keys[start + off] < terminator_bound:
                break
            limit = off + 1
        if limit <= parent_depth:
            continue
        out.append((i, i, parent_depth + 1, limit))
    return out
