"""Ranked multi-term queries over the single-term structures.

Each term's stored frequency-ordered document list acts as an inverted list
read incrementally; document frequency comes from the counting structure.
Scores are sums of f(tf) * g(df) per term. The driver doubles the per-term
extraction budget until the top-k set provably cannot change: conjunctive
answers come back with exact scores, disjunctive ones may stop early with
lower-bound scores but the returned document set is the true top-k set.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .corpus import LexRange, SuffixOracle
from .doccount import CountIndex, count_df
from .errors import InvalidParamError
from .pdl import PdlIndex, full_doc_set, pdl_topk_incremental


@dataclass(frozen=True)
class Query:
    terms: tuple
    mode: str = "or"
    k: int = 10

    def __post_init__(self):
        if not self.terms:
            raise InvalidParamError("a query needs at least one term")
        if self.mode not in ("and", "or"):
            raise InvalidParamError("mode must be 'and' or 'or'")
        if self.k < 1:
            raise InvalidParamError("k must be positive")


@dataclass
class ScoreModel:
    """f weighs term frequency (non-decreasing), g weighs document
    frequency (non-increasing); defaults give plain tf-idf."""

    f: callable = None
    g: callable = None
    d: int = 1

    def __post_init__(self):
        if self.f is None:
            self.f = float
        if self.g is None:
            d = self.d
            self.g = lambda df: math.log(d / max(df, 1))


@dataclass
class QueryEngine:
    oracle: SuffixOracle
    topk_index: PdlIndex
    count_index: CountIndex

    def model(self) -> ScoreModel:
        return ScoreModel(d=self.oracle.collection.d)


class _TermState:
    def __init__(self, engine: QueryEngine, term):
        self.rng = engine.oracle.find(term)
        self.df = count_df(engine.count_index, self.rng)
        self.seen: dict[int, int] = {}
        self.exhausted = self.rng.is_empty
        self.next_tf = 0
        self._iter = (
            iter(pdl_topk_incremental(engine.topk_index, engine.oracle, self.rng))
            if not self.rng.is_empty
            else iter(())
        )
        self._pending = None
        self._advance()

    def _advance(self):
        try:
            self._pending = next(self._iter)
            self.next_tf = self._pending[1]
        except StopIteration:
            self._pending = None
            self.exhausted = True
            self.next_tf = 0

    def extract_upto(self, budget: int):
        while not self.exhausted and len(self.seen) < budget:
            doc, tf = self._pending
            self.seen[doc] = tf
            self._advance()


def _true_scores(engine: QueryEngine, states, weights, model) -> dict[int, float]:
    oracle = engine.oracle
    da = oracle.document_array()
    totals: dict[int, float] = {}
    for st, g in zip(states, weights):
        if st.rng.is_empty:
            continue
        docs, counts = np.unique(da[st.rng.as_slice()], return_counts=True)
        for doc, tf in zip(docs, counts):
            totals[int(doc)] = totals.get(int(doc), 0.0) + model.f(int(tf)) * g
    return totals


def ranked_query(
    engine: QueryEngine,
    query: Query,
    model: ScoreModel | None = None,
    check_bounds: bool = False,
) -> list[tuple[int, float]]:
    """Top-k documents for a multi-term query, scores descending, ties by id."""
    model = model or engine.model()
    states = [_TermState(engine, t) for t in query.terms]
    weights = [model.g(st.df) for st in states]
    conj = query.mode == "and"
    if conj:
        if any(st.rng.is_empty for st in states):
            return []
        matching = set.intersection(
            *[full_doc_set(engine.topk_index, engine.oracle, st.rng) for st in states]
        )
        if not matching:
            return []
    else:
        matching = None
    k = query.k
    truth = _true_scores(engine, states, weights, model) if check_bounds else None

    budget = 2 * k
    while True:
        for st in states:
            st.extract_upto(budget)
        all_done = all(st.exhausted for st in states)
        candidates: set[int] = set()
        for st in states:
            candidates.update(st.seen.keys())
        if conj:
            candidates &= matching

        unseen_bound = sum(
            model.f(st.next_tf) * g for st, g in zip(states, weights)
        )
        rows = []
        for doc in candidates:
            lower = 0.0
            upper = 0.0
            exact = True
            for st, g in zip(states, weights):
                tf = st.seen.get(doc)
                if tf is None:
                    upper += model.f(st.next_tf) * g
                    if not st.exhausted:
                        exact = False
                else:
                    contrib = model.f(tf) * g
                    lower += contrib
                    upper += contrib
            rows.append((doc, lower, upper, exact))
        if truth is not None:
            for doc, lower, upper, _exact in rows:
                t = truth.get(doc, 0.0) if not conj else truth[doc]
                assert lower - 1e-9 <= t <= upper + 1e-9, (doc, lower, t, upper)

        rows.sort(key=lambda r: (-r[1], r[0]))
        want = min(k, len(matching)) if conj else k
        head = rows[:want]

        if all_done:
            return [(doc, lower) for doc, lower, _u, _e in head]

        if len(head) == want and want > 0:
            kth_doc, kth_lower = head[-1][0], head[-1][1]
            ok = all(e for (_d, _l, _u, e) in head) if conj else True
            if ok:
                outside = rows[want:]
                dominated = all(
                    (u, -doc) < (kth_lower, -kth_doc) for doc, _l, u, _e in outside
                )
                unseen_possible = (
                    len(matching) > len(candidates) if conj else True
                )
                if dominated and (
                    not unseen_possible or unseen_bound < kth_lower
                ):
                    return [(doc, lower) for doc, lower, _u, _e in head]
        budget *= 2


def batch_query(
    engine: QueryEngine,
    queries: list[Query],
    worker_count: int = 1,
    model: ScoreModel | None = None,
):
    """Run queries (order-preserving), returning results and timing stats."""
    if worker_count < 1:
        raise InvalidParamError("worker_count must be positive")
    model = model or engine.model()
    times = [0.0] * len(queries)

    def run(idx_query):
        idx, q = idx_query
        t0 = time.perf_counter()
        res = ranked_query(engine, q, model)
        times[idx] = time.perf_counter() - t0
        return res

    wall0 = time.perf_counter()
    if worker_count == 1:
        results = [run((i, q)) for i, q in enumerate(queries)]
    else:
        with ThreadPoolExecutor(max_workers=worker_count) as pool:
            results = list(pool.map(run, enumerate(queries)))
    wall = time.perf_counter() - wall0
    stats = {
        "total_seconds": wall,
        "mean_us_per_query": (sum(times) / len(queries) * 1e6) if queries else 0.0,
        "queries_per_second": (len(queries) / wall) if wall > 0 else 0.0,
        "workers": worker_count,
    }
    return results, stats
