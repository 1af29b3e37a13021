"""Pair-replacement grammar compression over integer sequences.

Each pass counts adjacent symbol pairs across all sequences, picks the most
frequent ones under the constraint that no symbol joins two new rules in the
same pass (so replacements of different rules can never overlap), and rewrites
every sequence left to right. Passes repeat until no pair occurs twice.

Rule ids start at `alphabet_size`; each rule body is a pair of symbols
(terminals or earlier rules), so every rule expands to >= 2 terminals.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _rewrite(seq, left_partner, left_rule, out):
    m = 0
    i = 0
    n = seq.shape[0]
    while i < n:
        a = seq[i]
        if i + 1 < n and left_partner[a] >= 0 and left_partner[a] == seq[i + 1]:
            out[m] = left_rule[a]
            m += 1
            i += 2
        else:
            out[m] = a
            m += 1
            i += 1
    return m


def _pair_counts(chunks: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    keys = []
    for seq in chunks:
        if seq.shape[0] >= 2:
            a = seq[:-1].astype(np.int64)
            b = seq[1:].astype(np.int64)
            keys.append((a << 32) | b)
    if not keys:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    uniq, counts = np.unique(np.concatenate(keys), return_counts=True)
    return uniq, counts


def compress_sequences(
    sequences: list[np.ndarray],
    alphabet_size: int,
    max_rules: int = 1 << 30,
    min_count: int = 2,
) -> tuple[list[np.ndarray], np.ndarray]:
    """Compress sequences into token streams; returns (tokens, rules).

    rules is an (R, 2) int32 array; token values >= alphabet_size refer to
    rule (token - alphabet_size). Every chosen pair is guaranteed at least one
    replacement, so no rule is left unused.
    """
    seqs = [np.ascontiguousarray(s, dtype=np.int32) for s in sequences]
    rules: list[tuple[int, int]] = []
    while len(rules) < max_rules:
        uniq, counts = _pair_counts(seqs)
        order = np.argsort(-counts, kind="stable")
        claimed: set[int] = set()
        chosen: list[int] = []
        for idx in order:
            if counts[idx] < min_count:
                break
            key = int(uniq[idx])
            a, b = key >> 32, key & 0xFFFFFFFF
            if a in claimed or b in claimed:
                continue
            claimed.add(a)
            claimed.add(b)
            chosen.append(key)
            if len(rules) + len(chosen) >= max_rules:
                break
        if not chosen:
            break
        nsym = alphabet_size + len(rules) + len(chosen)
        left_partner = np.full(nsym, -1, dtype=np.int64)
        left_rule = np.full(nsym, -1, dtype=np.int32)
        for key in chosen:
            a, b = key >> 32, key & 0xFFFFFFFF
            left_partner[a] = b
            left_rule[a] = alphabet_size + len(rules)
            rules.append((a, b))
        seqs = [_rewrite_seq(seq, left_partner, left_rule) for seq in seqs]

    rule_arr = np.array(rules, dtype=np.int32).reshape(-1, 2)
    return seqs, rule_arr


def _rewrite_seq(seq, left_partner, left_rule):
    out = np.empty(seq.shape[0], dtype=np.int32)
    m = _rewrite(seq, left_partner, left_rule, out)
    return out[:m].copy()


def expansion_lengths(rules: np.ndarray, alphabet_size: int) -> np.ndarray:
    """Terminal expansion length of each rule (children precede parents)."""
    nrules = rules.shape[0]
    lens = np.zeros(nrules, dtype=np.int64)
    for rid in range(nrules):
        total = 0
        for t in rules[rid]:
            total += 1 if t < alphabet_size else int(lens[t - alphabet_size])
        lens[rid] = total
    return lens


@njit(cache=True)
def expand_tokens_into(tokens, rules, alphabet_size, out):
    """Expand a token sequence to terminals; returns the number written."""
    stack = np.empty(64, dtype=np.int64)
    m = 0
    for idx in range(tokens.shape[0]):
        top = 0
        stack[top] = tokens[idx]
        top = 1
        while top > 0:
            top -= 1
            t = stack[top]
            if t < alphabet_size:
                out[m] = t
                m += 1
            else:
                rid = t - alphabet_size
                if top + 2 > stack.shape[0]:
                    grown = np.empty(stack.shape[0] * 2, dtype=np.int64)
                    grown[: stack.shape[0]] = stack
                    stack = grown
                stack[top] = rules[rid, 1]
                stack[top + 1] = rules[rid, 0]
                top += 2
    return m


def expand_tokens(tokens: np.ndarray, rules: np.ndarray, alphabet_size: int) -> np.ndarray:
    """Terminal expansion of a token sequence (recursive rules)."""
    lens = expansion_lengths(rules, alphabet_size)
    tokens = np.ascontiguousarray(tokens, dtype=np.int64)
    total = 0
    for t in tokens:
        total += 1 if t < alphabet_size else int(lens[t - alphabet_size])
    out = np.empty(max(total, 1), dtype=np.int64)
    m = expand_tokens_into(
        tokens, rules.astype(np.int64).reshape(-1, 2), alphabet_size, out
    )
    return out[:m]


def flatten_rules(rules: np.ndarray, alphabet_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Terminal expansion of every rule, concatenated, with start offsets.

    Offsets carry a final sentinel, so rule i spans
    bodies[offsets[i]:offsets[i+1]]. Used by the one-level set store, where
    stored rule bodies must be plain document ids.
    """
    bodies = [expand_tokens(rules[rid], rules, alphabet_size) for rid in range(rules.shape[0])]
    offsets = np.zeros(len(bodies) + 1, dtype=np.int64)
    for i, b in enumerate(bodies):
        offsets[i + 1] = offsets[i] + b.shape[0]
    concat = (
        np.concatenate(bodies).astype(np.int32) if bodies else np.empty(0, dtype=np.int32)
    )
    return concat, offsets
