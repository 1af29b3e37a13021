"""Document collections, suffix arrays, and the suffix oracle.

A collection is the concatenation of documents, each ended by a reserved
terminator byte (0). Suffix comparison treats every terminator occurrence as
a distinct symbol, ordered by descending text position, so the relative order
of any one document's suffixes matches the order they would have in that
document alone.

Public positions, suffix-array indexes, and document ids are 1-based;
internal numpy arrays are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numba import njit

from ._sais import suffix_array
from .errors import EmptyInputError, OutOfRangeError, ReservedSymbolError

TERMINATOR = 0


@dataclass(frozen=True)
class LexRange:
    """Inclusive 1-based interval of suffix-array indexes; empty iff lo > hi."""

    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(self.hi - self.lo + 1, 0)

    def as_slice(self) -> slice:
        """0-based half-open slice over suffix-array-aligned arrays."""
        return slice(self.lo - 1, self.hi)


EMPTY_RANGE = LexRange(1, 0)


class Collection:
    """Concatenated documents with their boundary structure."""

    def __init__(self, text: np.ndarray, doc_starts: np.ndarray):
        self.text = np.ascontiguousarray(text, dtype=np.uint8)
        self.doc_starts = np.ascontiguousarray(doc_starts, dtype=np.int64)
        self.n = int(self.text.shape[0])
        self.d = int(self.doc_starts.shape[0])
        if self.d < 1 or self.n < self.d:
            raise EmptyInputError("collection needs at least one document")

    def boundary_bits(self) -> np.ndarray:
        """B[0..n-1] as a bool array: True at each document start."""
        bits = np.zeros(self.n, dtype=bool)
        bits[self.doc_starts] = True
        return bits

    def doc_interval(self, doc_id: int) -> tuple[int, int]:
        """0-based half-open [start, end) of a document, terminator included."""
        if not 1 <= doc_id <= self.d:
            raise OutOfRangeError(f"document id {doc_id} not in [1..{self.d}]")
        start = int(self.doc_starts[doc_id - 1])
        end = int(self.doc_starts[doc_id]) if doc_id < self.d else self.n
        return start, end

    def doc_bytes(self, doc_id: int) -> bytes:
        start, end = self.doc_interval(doc_id)
        return self.text[start:end].tobytes()

    @cached_property
    def content_key(self) -> bytes:
        import hashlib

        h = hashlib.sha256()
        h.update(self.text.tobytes())
        h.update(self.doc_starts.tobytes())
        return h.digest()


def _as_doc_bytes(doc) -> bytes:
    if isinstance(doc, str):
        return doc.encode("utf-8")
    return bytes(doc)


def build_collection(documents) -> Collection:
    """Concatenate documents in order, appending a terminator to each."""
    docs = [_as_doc_bytes(doc) for doc in documents]
    if not docs:
        raise EmptyInputError("no documents given")
    for idx, doc in enumerate(docs):
        if TERMINATOR in doc:
            raise ReservedSymbolError(
                f"document {idx + 1} contains the reserved terminator byte"
            )
    lengths = np.fromiter((len(doc) + 1 for doc in docs), dtype=np.int64)
    starts = np.concatenate(([0], np.cumsum(lengths)[:-1]))
    text = np.zeros(int(lengths.sum()), dtype=np.uint8)
    for start, doc in zip(starts, docs):
        if doc:
            text[start : start + len(doc)] = np.frombuffer(doc, dtype=np.uint8)
    return Collection(text, starts)


@njit(cache=True)
def _compare_suffix(keys, pos, pat):
    """-1 / 0 / +1: suffix at pos is below / prefixed-by / above pat."""
    n = keys.shape[0]
    m = pat.shape[0]
    for off in range(m):
        if pos + off >= n:
            return -1
        c = keys[pos + off]
        p = pat[off]
        if c < p:
            return -1
        if c > p:
            return 1
    return 0


@njit(cache=True)
def _pattern_range(keys, sa, pat):
    n = sa.shape[0]
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_suffix(keys, sa[mid], pat) < 0:
            lo = mid + 1
        else:
            hi = mid
    first = lo
    hi = n
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_suffix(keys, sa[mid], pat) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return first, lo  # 0-based half-open


class SuffixOracle:
    """Suffix array access, pattern search, and position-to-document mapping.

    Immutable after construction; `sample_period` is carried only for
    benchmark accounting of simulated locate cost.
    """

    def __init__(self, collection: Collection, sa: np.ndarray, sample_period: int = 32):
        self.collection = collection
        self.sa = np.ascontiguousarray(sa, dtype=np.int32)
        self.sample_period = int(sample_period)
        self.n = collection.n

    @cached_property
    def sort_keys(self) -> np.ndarray:
        return _sort_keys(self.collection)

    def sa_value(self, i: int) -> int:
        """1-based text position of the i-th lexicographic suffix (1-based i)."""
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"suffix index {i} not in [1..{self.n}]")
        return int(self.sa[i - 1]) + 1

    def sa_values(self) -> np.ndarray:
        """All suffix positions, 1-based, in lexicographic order."""
        return self.sa.astype(np.int64) + 1

    def find(self, pattern) -> LexRange:
        """Maximal suffix-array interval of suffixes prefixed by the pattern."""
        pat = _as_doc_bytes(pattern)
        if not pat:
            raise EmptyInputError("empty pattern")
        if TERMINATOR in pat:
            raise ReservedSymbolError("pattern contains the reserved terminator byte")
        keys = np.frombuffer(pat, dtype=np.uint8).astype(np.int32) + (
            self.collection.d - 1
        )
        lo, hi = _pattern_range(self.sort_keys, self.sa, keys)
        return LexRange(lo + 1, hi)

    def doc_of(self, i: int) -> int:
        """Document id (1-based) owning the i-th lexicographic suffix."""
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"suffix index {i} not in [1..{self.n}]")
        pos = self.sa[i - 1]
        return int(np.searchsorted(self.collection.doc_starts, pos, side="right"))

    @cached_property
    def _document_array(self) -> np.ndarray:
        return np.searchsorted(
            self.collection.doc_starts, self.sa, side="right"
        ).astype(np.int32)

    @cached_property
    def _lcp(self) -> np.ndarray:
        from .suffixtree import kasai_lcp

        return kasai_lcp(self.sort_keys, self.sa)

    def lcp_array(self) -> np.ndarray:
        """Global LCP array (0-based; entry i compares suffixes i-1 and i)."""
        return self._lcp

    def document_array(self) -> np.ndarray:
        """Document id per suffix-array slot (0-based slots, 1-based ids)."""
        return self._document_array

    def locate(self, rng: LexRange) -> np.ndarray:
        """1-based text positions of a range of suffixes."""
        if rng.is_empty:
            return np.empty(0, dtype=np.int64)
        self._check_range(rng)
        return self.sa[rng.as_slice()].astype(np.int64) + 1

    def docs_in_range(self, rng: LexRange) -> np.ndarray:
        """Document ids (with multiplicity) of a range of suffixes."""
        if rng.is_empty:
            return np.empty(0, dtype=np.int32)
        self._check_range(rng)
        return self._document_array[rng.as_slice()]

    def _check_range(self, rng: LexRange) -> None:
        if rng.lo < 1 or rng.hi > self.n:
            raise OutOfRangeError(f"range [{rng.lo}..{rng.hi}] not within [1..{self.n}]")


def _sort_keys(collection: Collection) -> np.ndarray:
    """Symbols for suffix comparison: distinct terminators, descending by position."""
    d = collection.d
    keys = collection.text.astype(np.int32) + (d - 1)
    ends = np.concatenate((collection.doc_starts[1:] - 1, [collection.n - 1]))
    keys[ends] = np.arange(d - 1, -1, -1, dtype=np.int32)
    return keys


def build_suffix_oracle(collection: Collection, sample_period: int = 32) -> SuffixOracle:
    keys = _sort_keys(collection)
    sa = suffix_array(keys, alphabet_size=collection.d + 255)
    oracle = SuffixOracle(collection, sa, sample_period)
    oracle.__dict__["sort_keys"] = keys
    return oracle


def doc_of(oracle: SuffixOracle, i: int) -> int:
    return oracle.doc_of(i)


def document_array(oracle: SuffixOracle) -> np.ndarray:
    return oracle.document_array()


def find(oracle: SuffixOracle, pattern) -> LexRange:
    return oracle.find(pattern)
