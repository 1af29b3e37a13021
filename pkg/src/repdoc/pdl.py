"""Precomputed document lists over a sampled suffix tree.

Leaf blocks are the maximal suffix-tree nodes covering at most `b` suffixes;
every larger node is a sampled internal node. Each stored node keeps its
distinct-document set, grammar-compressed: frequent symbol pairs become
rules, flattened to plain id runs in the listing variant (one expansion
level) and kept recursive in the ordered top-k variants.

Variants:
  listing  sets sorted by id, internal nodes thinned by the storing factor
  topk     every internal node keeps its list sorted by (freq desc, id asc)
  pruned   like listing's tree, but lists are frequency-ordered and carry
           their frequencies for merge-based top-k
"""

from __future__ import annotations

import numpy as np

from . import repair
from .corpus import Collection, LexRange, SuffixOracle
from .errors import InvalidParamError, UnsupportedVariantError
from .succinct import PlainBitvector, SparseBitvector
from .suffixtree import enumerate_nodes

DEFAULT_BLOCK = 256
DEFAULT_FACTOR = 16


def _merge_doc_counts(parts):
    """Merge (docs, counts) pairs into one sorted, aggregated pair."""
    docs = np.concatenate([p[0] for p in parts])
    counts = np.concatenate([p[1] for p in parts])
    order = np.argsort(docs, kind="stable")
    docs = docs[order]
    counts = counts[order]
    boundaries = np.concatenate(([True], docs[1:] != docs[:-1]))
    starts = np.flatnonzero(boundaries)
    summed = np.add.reduceat(counts, starts)
    return docs[starts], summed


class _SampledTree:
    """Construction-time view of the sampled suffix tree."""

    def __init__(self, collection: Collection, oracle: SuffixOracle, b: int):
        if b < 2:
            raise InvalidParamError("block size must be at least 2")
        self.n = collection.n
        self.d = collection.d
        da = oracle.document_array()
        table = enumerate_nodes(oracle.lcp_array())
        sizes = (table.rb - table.lb + 1) if table.count else np.empty(0, dtype=np.int64)
        big = sizes > b
        self.table = table
        if self.n <= b or table.count == 0 or not big.any():
            self.leaf_blocks = [(0, self.n - 1)]
            self.big_ids = np.empty(0, dtype=np.int64)
            self.children = {}
        else:
            kids = table.children_lists()
            big_ids = [v for v in range(table.count) if big[v]]
            leaf_blocks: list[tuple[int, int]] = []
            children: dict[int, list[tuple[str, int]]] = {v: [] for v in big_ids}
            for v in big_ids:
                lo, hi = int(table.lb[v]), int(table.rb[v])
                pos = lo
                out = children[v]
                for ch in kids[v]:
                    clo, chi = int(table.lb[ch]), int(table.rb[ch])
                    while pos < clo:
                        out.append(("leaf", len(leaf_blocks)))
                        leaf_blocks.append((pos, pos))
                        pos += 1
                    if big[ch]:
                        out.append(("node", ch))
                    else:
                        out.append(("leaf", len(leaf_blocks)))
                        leaf_blocks.append((clo, chi))
                    pos = chi + 1
                while pos <= hi:
                    out.append(("leaf", len(leaf_blocks)))
                    leaf_blocks.append((pos, pos))
                    pos += 1
            # renumber leaf blocks left to right
            order = sorted(range(len(leaf_blocks)), key=lambda i: leaf_blocks[i][0])
            remap = {old: new for new, old in enumerate(order)}
            self.leaf_blocks = [leaf_blocks[i] for i in order]
            for v in big_ids:
                children[v] = [
                    (k, remap[p]) if k == "leaf" else (k, p) for (k, p) in children[v]
                ]
            self.big_ids = np.array(big_ids, dtype=np.int64)
            self.children = children
        self.leaf_sets = [
            np.unique(da[s : e + 1], return_counts=True) for (s, e) in self.leaf_blocks
        ]
        self.node_sets: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        for v in self.big_ids:
            parts = [
                self.leaf_sets[p] if kind == "leaf" else self.node_sets[p]
                for (kind, p) in self.children[int(v)]
            ]
            self.node_sets[int(v)] = _merge_doc_counts(parts)

    def child_set_size(self, kind: str, payload: int) -> int:
        pair = self.leaf_sets[payload] if kind == "leaf" else self.node_sets[payload]
        return int(pair[0].shape[0])

    def prune(self, beta: float):
        """Remove internal nodes whose children's sets are cheap to merge.

        Returns (survivor ids in close order, prune log entries
        (interval, children total, own set size))."""
        if beta < 1:
            raise InvalidParamError("storing factor must be at least 1")
        alive = {int(v): True for v in self.big_ids}
        log = []
        root = int(self.big_ids[-1]) if self.big_ids.shape[0] else -1
        for v in self.big_ids:
            v = int(v)
            if v == root:
                continue
            total = sum(self.child_set_size(k, p) for (k, p) in self.children[v])
            own = int(self.node_sets[v][0].shape[0])
            if total <= beta * own:
                alive[v] = False
                log.append(((int(self.table.lb[v]), int(self.table.rb[v])), total, own))
                parent = int(self.table.parent[v])
                plist = self.children[parent]
                at = plist.index(("node", v))
                self.children[parent] = plist[:at] + self.children[v] + plist[at + 1 :]
                del self.children[v]
        survivors = [int(v) for v in self.big_ids if alive[int(v)]]
        return survivors, log


def _delta_cost(values: np.ndarray) -> int:
    """Total delta-code length of positive values (vectorized, exact)."""
    if values.shape[0] == 0:
        return 0
    v = values.astype(np.int64)
    lv = np.frexp(v.astype(np.float64))[1].astype(np.int64)  # bit lengths
    llv = np.frexp(lv.astype(np.float64))[1].astype(np.int64)
    return int((2 * llv + lv - 2).sum())


class _FrequencyStore:
    """Non-increasing frequency lists, run-length + delta-of-head coded."""

    def __init__(self, freq_lists: list[np.ndarray]):
        heads_all = []
        lens_all = []
        node_runs = np.zeros(len(freq_lists) + 1, dtype=np.int64)
        for idx, f in enumerate(freq_lists):
            if f.shape[0]:
                change = np.flatnonzero(np.diff(f) != 0) + 1
                starts = np.concatenate(([0], change))
                heads = f[starts]
                lens = np.diff(np.concatenate((starts, [f.shape[0]])))
            else:
                heads = np.empty(0, dtype=np.int64)
                lens = np.empty(0, dtype=np.int64)
            heads_all.append(heads.astype(np.int64))
            lens_all.append(lens.astype(np.int64))
            node_runs[idx + 1] = node_runs[idx] + heads.shape[0]
        self.node_runs = node_runs
        heads_cat = (
            np.concatenate(heads_all) if heads_all else np.empty(0, dtype=np.int64)
        )
        lens_cat = np.concatenate(lens_all) if lens_all else np.empty(0, dtype=np.int64)
        # heads within a node strictly decrease: store first head, then drops
        deltas = heads_cat.copy()
        for idx in range(len(freq_lists)):
            a, b = node_runs[idx], node_runs[idx + 1]
            if b - a > 1:
                deltas[a + 1 : b] = heads_cat[a : b - 1] - heads_cat[a + 1 : b]
        self.deltas = deltas
        self.lens = lens_cat
        self._stream_bits = _delta_cost(self.deltas) + _delta_cost(self.lens)

    def decode(self, node_idx: int, limit: int | None = None) -> np.ndarray:
        a, b = int(self.node_runs[node_idx]), int(self.node_runs[node_idx + 1])
        out = []
        head = 0
        remaining = limit
        for r in range(a, b):
            head = self.deltas[r] if r == a else head - self.deltas[r]
            ln = int(self.lens[r])
            if remaining is not None:
                ln = min(ln, remaining)
            out.extend([int(head)] * ln)
            if remaining is not None:
                remaining -= ln
                if remaining <= 0:
                    break
        return np.array(out, dtype=np.int64)

    def size_in_bits(self) -> int:
        return self._stream_bits + 64 * self.node_runs.shape[0]


class PdlIndex:
    """Sampled suffix tree with stored (compressed) document sets."""

    def __init__(self, variant, b, beta, n, d, leaf_starts, first_child,
                 parent_of_first, next_leaf, node_first_leaf, stored_base,
                 tokens, set_offsets, rule_bodies, rule_offsets, freq_store,
                 uncompressed_tokens, prune_log=None):
        self.variant = variant
        self.b = b
        self.beta = beta
        self.n = n
        self.d = d
        self.leaf_starts = leaf_starts          # SparseBitvector over text slots
        self.leaf_count = leaf_starts.ones
        self.first_child = first_child          # PlainBitvector over node ids
        self.parent_of_first = parent_of_first  # rank in first_child -> internal idx
        self.next_leaf = next_leaf              # internal idx (0-based) -> leaf id after subtree
        self.node_first_leaf = node_first_leaf  # internal idx -> first leaf id
        self.stored_base = stored_base          # node id offset of stored sets
        self.tokens = tokens
        self.set_offsets = set_offsets
        self.rule_bodies = rule_bodies
        self.rule_offsets = rule_offsets
        self.freq_store = freq_store
        self.uncompressed_tokens = uncompressed_tokens
        self.prune_log = prune_log
        self.internal_count = int(next_leaf.shape[0])

    # -- stored-set access ---------------------------------------------------

    def stored_count(self) -> int:
        return int(self.set_offsets.shape[0]) - 1

    def _set_tokens(self, store_idx: int) -> np.ndarray:
        a, b = int(self.set_offsets[store_idx]), int(self.set_offsets[store_idx + 1])
        return self.tokens[a:b]

    def expand_set(self, store_idx: int) -> np.ndarray:
        toks = self._set_tokens(store_idx)
        if self.variant == "listing":
            parts = []
            for t in toks:
                t = int(t)
                if t <= self.d:
                    parts.append(np.array([t], dtype=np.int64))
                else:
                    rid = t - self.d - 1
                    a, b = int(self.rule_offsets[rid]), int(self.rule_offsets[rid + 1])
                    parts.append(self.rule_bodies[a:b].astype(np.int64))
            return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
        return repair.expand_tokens(
            toks.astype(np.int64), self._pair_rules(), self.d + 1
        )

    def _pair_rules(self) -> np.ndarray:
        return self.rule_bodies.reshape(-1, 2)

    def set_with_freqs(self, store_idx: int):
        docs = self.expand_set(store_idx)
        if self.freq_store is None:
            raise UnsupportedVariantError("index stores no frequencies")
        freqs = self.freq_store.decode(store_idx)
        return docs, freqs

    def token_count(self) -> int:
        extra = (
            self.rule_bodies.shape[0]
            if self.variant != "listing"
            else int(self.rule_offsets[-1])
        )
        return int(self.tokens.shape[0]) + int(extra)

    def size_in_bits(self) -> int:
        nsym = self.d + 1 + (self.rule_offsets.shape[0] - 1 if self.variant == "listing"
                             else self.rule_bodies.shape[0] // 2)
        w = max(int(nsym).bit_length(), 1)
        total = self.tokens.shape[0] * w + self.rule_bodies.shape[0] * w
        total += self.tokens.shape[0] + self.rule_bodies.shape[0]  # boundary bits
        total += self.leaf_starts.size_in_bits()
        total += self.first_child.size_in_bits()
        total += 64 * (self.parent_of_first.shape[0] + self.next_leaf.shape[0]
                       + self.node_first_leaf.shape[0])
        if self.freq_store is not None:
            total += self.freq_store.size_in_bits()
        return total + 256

    # -- boundary helpers ----------------------------------------------------

    def leaf_start(self, leaf_id: int) -> int:
        """1-based start of a leaf block; leaf_count+1 maps past the end."""
        if leaf_id == self.leaf_count + 1:
            return self.n + 1
        return self.leaf_starts.select(1, leaf_id)


def _number_and_pack(tree: _SampledTree, survivors: list[int]):
    """Assign node ids (leaves 1..L, internals after) and build link arrays."""
    n_leaves = len(tree.leaf_blocks)
    order = sorted(
        survivors,
        key=lambda v: (int(tree.table.lb[v]), -(int(tree.table.rb[v]) - int(tree.table.lb[v]))),
    )
    internal_idx = {v: i for i, v in enumerate(order)}  # 0-based internal index
    leaf_start_arr = np.array([s for (s, _e) in tree.leaf_blocks], dtype=np.int64)
    node_count = n_leaves + len(order)
    first_child_bits = np.zeros(node_count, dtype=bool)
    parent_rank: list[int] = []
    by_node_parent = np.full(node_count, -1, dtype=np.int64)
    for v in order:
        kids = tree.children[v]
        if not kids:
            continue
        kind, payload = kids[0]
        child_id = payload + 1 if kind == "leaf" else n_leaves + internal_idx[payload] + 1
        first_child_bits[child_id - 1] = True
        by_node_parent[child_id - 1] = internal_idx[v]
    # rank order over first-child bits gives the parent pointer array
    for node_id in range(1, node_count + 1):
        if first_child_bits[node_id - 1]:
            parent_rank.append(int(by_node_parent[node_id - 1]))
    next_leaf = np.empty(len(order), dtype=np.int64)
    node_first_leaf = np.empty(len(order), dtype=np.int64)
    for v, i in internal_idx.items():
        lb, rb = int(tree.table.lb[v]), int(tree.table.rb[v])
        node_first_leaf[i] = int(np.searchsorted(leaf_start_arr, lb, side="right"))
        next_leaf[i] = int(np.searchsorted(leaf_start_arr, rb, side="right")) + 1
    return (
        order,
        SparseBitvector(leaf_start_arr, tree.n),
        PlainBitvector(first_child_bits),
        np.array(parent_rank, dtype=np.int64),
        next_leaf,
        node_first_leaf,
    )


def _pack_sets(sequences: list[np.ndarray], d: int, variant: str, compress: bool):
    seqs32 = [np.ascontiguousarray(s, dtype=np.int32) for s in sequences]
    uncompressed = int(sum(s.shape[0] for s in seqs32))
    if compress:
        comp, rules = repair.compress_sequences(seqs32, d + 1)
    else:
        comp, rules = seqs32, np.empty((0, 2), dtype=np.int32)
    offsets = np.zeros(len(comp) + 1, dtype=np.int64)
    for i, s in enumerate(comp):
        offsets[i + 1] = offsets[i] + s.shape[0]
    tokens = (
        np.concatenate(comp).astype(np.int32) if comp else np.empty(0, dtype=np.int32)
    )
    if variant == "listing":
        bodies, rofs = repair.flatten_rules(rules, d + 1)
        return tokens, offsets, bodies, rofs, uncompressed
    return tokens, offsets, rules.reshape(-1).astype(np.int32), None, uncompressed


def build_pdl_listing(
    collection: Collection,
    oracle: SuffixOracle,
    b: int = DEFAULT_BLOCK,
    beta: float = DEFAULT_FACTOR,
    compress: bool = True,
    keep_prune_log: bool = False,
) -> PdlIndex:
    tree = _SampledTree(collection, oracle, b)
    survivors, log = tree.prune(beta)
    order, leaf_bv, fc_bv, parent_rank, next_leaf, node_first_leaf = _number_and_pack(
        tree, survivors
    )
    sets = [docs.astype(np.int32) for (docs, _c) in tree.leaf_sets]
    sets += [tree.node_sets[v][0].astype(np.int32) for v in order]
    tokens, offsets, bodies, rofs, raw = _pack_sets(sets, collection.d, "listing", compress)
    return PdlIndex(
        "listing", b, beta, collection.n, collection.d, leaf_bv, fc_bv,
        parent_rank, next_leaf, node_first_leaf, 0, tokens, offsets, bodies,
        rofs, None, raw, prune_log=log if keep_prune_log else None,
    )


def build_pdl_topk(
    collection: Collection,
    oracle: SuffixOracle,
    b: int = DEFAULT_BLOCK,
    beta: float | None = None,
    with_freqs: bool = True,
    compress: bool = True,
) -> PdlIndex:
    """Full-answers variant when beta is None, merge-based pruned otherwise."""
    tree = _SampledTree(collection, oracle, b)
    if beta is None:
        survivors, log = [int(v) for v in tree.big_ids], []
        variant = "topk"
    else:
        survivors, log = tree.prune(beta)
        variant = "pruned"
    order, leaf_bv, fc_bv, parent_rank, next_leaf, node_first_leaf = _number_and_pack(
        tree, survivors
    )

    def ordered(docs, counts):
        perm = np.lexsort((docs, -counts))
        return docs[perm].astype(np.int32), counts[perm].astype(np.int64)

    seqs = []
    freq_lists = []
    if variant == "pruned":
        for docs, counts in tree.leaf_sets:
            dd, cc = ordered(docs, counts)
            seqs.append(dd)
            freq_lists.append(cc)
        stored_base = 0
    else:
        stored_base = len(tree.leaf_blocks)
    for v in order:
        docs, counts = tree.node_sets[v]
        dd, cc = ordered(docs, counts)
        seqs.append(dd)
        freq_lists.append(cc)
    tokens, offsets, bodies, rofs, raw = _pack_sets(seqs, collection.d, variant, compress)
    store = _FrequencyStore(freq_lists) if (with_freqs or variant == "pruned") else None
    return PdlIndex(
        variant, b, beta, collection.n, collection.d, leaf_bv, fc_bv,
        parent_rank, next_leaf, node_first_leaf, stored_base, tokens, offsets,
        bodies, rofs, store, raw, prune_log=log or None,
    )


# ---------------------------------------------------------------------------
# queries


def _brute_docs(oracle: SuffixOracle, lo: int, hi: int) -> np.ndarray:
    return np.unique(oracle.docs_in_range(LexRange(lo, hi)))


def _covering(index: PdlIndex, oracle: SuffixOracle, rng: LexRange):
    """Split a range into brute spans and covered stored-node ids (Fig-style
    walk: partial edge leaves are listed by locate, inner leaves climb to the
    largest stored ancestors that stay inside the range)."""
    lo, hi = rng.lo, rng.hi
    spans: list[tuple[int, int]] = []
    nodes: list[int] = []
    ln = index.leaf_starts.rank(1, lo)
    if index.leaf_start(ln) < lo:
        r2 = min(index.leaf_start(ln + 1) - 1, hi)
        spans.append((lo, r2))
        if r2 == hi:
            return spans, nodes
        ln += 1
    rn = (
        index.leaf_count + 1
        if hi + 1 > index.n
        else index.leaf_starts.rank(1, hi + 1)
    ) - 1
    if index.leaf_start(rn + 1) <= hi:
        spans.append((index.leaf_start(rn + 1), hi))
    i = ln
    while i <= rn:
        nxt = i + 1
        while index.first_child.access(i):
            par = int(index.parent_of_first[index.first_child.rank(1, i) - 1])
            nxt2 = int(index.next_leaf[par])
            if nxt2 > rn + 1:
                break
            i = index.leaf_count + par + 1
            nxt = nxt2
        nodes.append(i)
        i = nxt
    return spans, nodes


def pdl_list(index: PdlIndex, oracle: SuffixOracle, rng: LexRange) -> set[int]:
    """Distinct documents in a match range via stored sets."""
    if rng.is_empty:
        return set()
    if index.variant != "listing":
        raise UnsupportedVariantError("listing requires a listing-variant index")
    spans, nodes = _covering(index, oracle, rng)
    out: set[int] = set()
    for lo, hi in spans:
        out.update(int(x) for x in _brute_docs(oracle, lo, hi))
    for node_id in nodes:
        out.update(int(x) for x in index.expand_set(node_id - 1))
    return out


def _range_counts(oracle: SuffixOracle, lo: int, hi: int):
    docs = oracle.docs_in_range(LexRange(lo, hi))
    return np.unique(docs, return_counts=True)


def _top_k_of(docs: np.ndarray, counts: np.ndarray, k: int):
    perm = np.lexsort((docs, -counts))
    take = perm[:k]
    return [(int(docs[i]), int(counts[i])) for i in take]


def _locate_stored_node(index: PdlIndex, rng: LexRange) -> int | None:
    """Internal index (0-based) of the stored node exactly covering rng."""
    lo, hi = rng.lo, rng.hi
    ln = index.leaf_starts.rank(1, lo)
    if index.leaf_start(ln) != lo:
        return None
    node = ln  # node id
    if index.leaf_start(ln + 1) - 1 > hi:
        return None
    while True:
        if node > index.leaf_count:
            par_i = node - index.leaf_count - 1
            end = index.leaf_start(int(index.next_leaf[par_i])) - 1
            start = index.leaf_start(int(index.node_first_leaf[par_i]))
            if start == lo and end == hi:
                return par_i
            if end >= hi:
                return None
        if not index.first_child.access(node):
            return None
        par = int(index.parent_of_first[index.first_child.rank(1, node) - 1])
        nxt_end = index.leaf_start(int(index.next_leaf[par])) - 1
        if nxt_end > hi:
            return None
        node = index.leaf_count + par + 1


def pdl_topk(index: PdlIndex, oracle: SuffixOracle, rng: LexRange, k: int) -> list[tuple[int, int]]:
    """k documents with the highest in-range frequency, ties by smaller id."""
    if k < 1:
        raise InvalidParamError("k must be positive")
    if rng.is_empty:
        return []
    if index.variant == "topk":
        par_i = _locate_stored_node(index, rng)
        if par_i is not None:
            toks = index._set_tokens(par_i)
            docs = _expand_prefix(index, toks, k)
            if index.freq_store is not None:
                freqs = index.freq_store.decode(par_i, limit=docs.shape[0])
            else:
                freqs = _recount(oracle, rng, docs)
            return [(int(d), int(f)) for d, f in zip(docs, freqs)]
        docs, counts = _range_counts(oracle, rng.lo, rng.hi)
        return _top_k_of(docs, counts, k)
    if index.variant == "pruned":
        spans, nodes = _covering(index, oracle, rng)
        parts = [_range_counts(oracle, lo, hi) for (lo, hi) in spans]
        for node_id in nodes:
            docs, freqs = index.set_with_freqs(node_id - 1)
            parts.append((docs, freqs))
        docs, counts = _merge_doc_counts(parts)
        return _top_k_of(docs, counts, k)
    raise UnsupportedVariantError("top-k requires a top-k index variant")


def _expand_prefix(index: PdlIndex, toks: np.ndarray, k: int) -> np.ndarray:
    out: list[int] = []
    rules = index._pair_rules()
    for t in toks:
        if len(out) >= k:
            break
        t = int(t)
        if t <= index.d:
            out.append(t)
        else:
            expanded = repair.expand_tokens(
                np.array([t], dtype=np.int64), rules, index.d + 1
            )
            out.extend(int(x) for x in expanded[: k - len(out)])
    return np.array(out[:k], dtype=np.int64)


def _recount(oracle: SuffixOracle, rng: LexRange, docs: np.ndarray) -> np.ndarray:
    all_docs = oracle.docs_in_range(rng)
    return np.array([int(np.count_nonzero(all_docs == d)) for d in docs], dtype=np.int64)


def pdl_topk_incremental(index: PdlIndex, oracle: SuffixOracle, rng: LexRange):
    """Stream (doc, freq) pairs in non-increasing frequency order."""
    if index.variant != "topk":
        raise UnsupportedVariantError("incremental top-k needs the full-answers variant")
    if rng.is_empty:
        return
    par_i = _locate_stored_node(index, rng)
    if par_i is None:
        docs, counts = _range_counts(oracle, rng.lo, rng.hi)
        for doc, tf in _top_k_of(docs, counts, docs.shape[0]):
            yield doc, tf
        return
    toks = index._set_tokens(par_i)
    freqs = index.freq_store.decode(par_i) if index.freq_store is not None else None
    rules = index._pair_rules()
    pos = 0
    for t in toks:
        t = int(t)
        if t <= index.d:
            batch = [t]
        else:
            batch = [int(x) for x in repair.expand_tokens(
                np.array([t], dtype=np.int64), rules, index.d + 1)]
        for doc in batch:
            if freqs is not None:
                yield doc, int(freqs[pos])
            else:
                yield doc, int(_recount(oracle, rng, np.array([doc]))[0])
            pos += 1


def full_doc_set(index: PdlIndex, oracle: SuffixOracle, rng: LexRange) -> set[int]:
    """Complete distinct-document set of a range (stored list or locate)."""
    if rng.is_empty:
        return set()
    if index.variant == "topk":
        par_i = _locate_stored_node(index, rng)
        if par_i is not None:
            return set(int(x) for x in index.expand_set(par_i))
        return set(int(x) for x in _brute_docs(oracle, rng.lo, rng.hi))
    if index.variant == "listing":
        return pdl_list(index, oracle, rng)
    spans, nodes = _covering(index, oracle, rng)
    out: set[int] = set()
    for lo, hi in spans:
        out.update(int(x) for x in _brute_docs(oracle, lo, hi))
    for node_id in nodes:
        out.update(int(x) for x in index.expand_set(node_id - 1))
    return out
