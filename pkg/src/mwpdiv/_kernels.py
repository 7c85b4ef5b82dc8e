"""Compiled nearest-neighbour search over n-gram profiles.

A group's sequences are interned into one n-gram id space (orders occupy
disjoint id ranges) and stored as (id, count) runs. To score row i, its counts
are scattered into a dense array; the clipped match count against j is then a
pass over j's runs. The match count is symmetric; only the precision
denominators and brevity penalty differ between the two BLEU directions, so
one pass per order serves both, and each unordered pair is scored once.

The floating-point steps mirror ``similarity.bleu`` operation for operation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import exp, log

import numba
import numpy as np
from numba import njit, prange

# prefer OpenMP; probing an old TBB only produces a warning
if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

ORDERS = 4
# fixed so that chunk boundaries never depend on the thread count
CHUNKS = 64


@dataclass(frozen=True)
class Profiles:
    lengths: np.ndarray   # (M,) int64
    offsets: np.ndarray   # (M*ORDERS + 1,) int64; run (i, n) = offsets[i*4+n-1]:offsets[i*4+n]
    ids: np.ndarray       # int32 n-gram ids, sorted within each run
    counts: np.ndarray    # int32
    n_ids: int            # size of the id space over all orders
    post_ptr: np.ndarray  # CSR over unigram ids
    post_idx: np.ndarray  # member indices, ascending within each unigram

    def __len__(self) -> int:
        return int(self.lengths.size)


def build_profiles(sequences) -> Profiles:
    m = len(sequences)
    vocab: dict = {}
    flat: list[int] = []
    lengths = np.empty(m, dtype=np.int64)
    for i, seq in enumerate(sequences):
        if not len(seq):
            raise ValueError("empty sequence")
        lengths[i] = len(seq)
        flat.extend(vocab.setdefault(t, len(vocab)) for t in seq)
    tok = np.asarray(flat, dtype=np.int64)
    member = np.repeat(np.arange(m, dtype=np.int64), lengths)
    # position of each token counted from the end of its sequence
    ends = np.cumsum(lengths)
    remaining = np.repeat(ends, lengths) - np.arange(tok.size)

    seq_parts, order_parts, id_parts, count_parts = [], [], [], []
    base = 0
    key = np.zeros(tok.size, dtype=np.int64)
    n_uni = 0
    for n in range(ORDERS):
        # an n-gram is its (n-1)-gram prefix id extended by one more token
        valid = remaining >= n + 1
        if n == 0:
            key = tok.copy()
        else:
            shifted = np.empty_like(tok)
            shifted[:-n] = tok[n:]
            shifted[-n:] = 0
            key = key * len(vocab) + shifted
        gram_keys, gram = np.unique(key[valid], return_inverse=True)
        # compress keys so the next order cannot overflow
        dense_key = np.zeros(tok.size, dtype=np.int64)
        dense_key[valid] = gram
        key = dense_key
        n_grams = gram_keys.size
        pair_keys, pair_counts = np.unique(member[valid] * n_grams + gram, return_counts=True)
        pair_member, pair_gram = np.divmod(pair_keys, n_grams)
        # frequent n-grams get small ids so hot lookups share cache lines
        df = np.bincount(pair_gram, minlength=n_grams)
        rank = np.empty(n_grams, dtype=np.int64)
        rank[np.lexsort((np.arange(n_grams), -df))] = np.arange(n_grams)
        seq_parts.append(pair_member)
        order_parts.append(np.full(pair_member.size, n, dtype=np.int64))
        id_parts.append(base + rank[pair_gram])
        count_parts.append(pair_counts)
        if n == 0:
            n_uni = n_grams
        base += n_grams

    seq_all = np.concatenate(seq_parts) if seq_parts else np.zeros(0, dtype=np.int64)
    order_all = np.concatenate(order_parts) if order_parts else np.zeros(0, dtype=np.int64)
    id_all = np.concatenate(id_parts) if id_parts else np.zeros(0, dtype=np.int64)
    count_all = np.concatenate(count_parts) if count_parts else np.zeros(0, dtype=np.int64)
    layout = np.lexsort((id_all, order_all, seq_all))
    ids_arr = id_all[layout].astype(np.int32)
    counts_arr = count_all[layout].astype(np.int32)
    offsets = np.zeros(m * ORDERS + 1, dtype=np.int64)
    np.cumsum(np.bincount(seq_all * ORDERS + order_all, minlength=m * ORDERS), out=offsets[1:])

    # unigram postings, members ascending within each id
    uni = order_all[layout] == 0
    flat_ids = id_all[layout][uni]
    order = np.argsort(flat_ids, kind="stable")
    post_idx = seq_all[layout][uni][order]
    post_ptr = np.zeros(n_uni + 1, dtype=np.int64)
    np.cumsum(np.bincount(flat_ids, minlength=n_uni), out=post_ptr[1:])
    return Profiles(lengths, offsets, ids_arr, counts_arr, base, post_ptr, post_idx)


@njit(cache=True, nogil=True)
def _scatter(dense, i, offsets, ids, counts, value_sign):
    for t in range(offsets[i * ORDERS], offsets[i * ORDERS + ORDERS]):
        dense[ids[t]] = counts[t] * value_sign


@njit(cache=True, nogil=True)
def log_table(n):
    """``log(k)`` for ``k`` in ``0..n`` (entry 0 unused), from the same ``log`` as the scorer."""
    t = np.zeros(n + 1, dtype=np.float64)
    for k in range(1, n + 1):
        t[k] = log(k)
    return t


@njit(cache=True, nogil=True)
def _bound_logs(m_prev, n, order, li, lj, si, sj, lg):
    """Log-space upper bounds on both BLEU directions once orders ``1..n`` are known.

    Clipped matches never grow with the order (every matched k-gram starts
    with a matched (k-1)-gram), so ``m_k <= m_n`` for ``k > n``.
    """
    for k in range(n + 1, order + 1):
        cap = min(m_prev, li - k + 1, lj - k + 1)
        si += lg[cap] - lg[li - k + 1]
        sj += lg[cap] - lg[lj - k + 1]
    return si / order + min(0.0, 1.0 - lj / li), sj / order + min(0.0, 1.0 - li / lj)


@njit(cache=True, nogil=True)
def _sim_dense(dense, i, j, lengths, offsets, ids, counts, smoothing, log_floor, lg):
    """Symmetric similarity of (i, j) with i's n-gram counts scattered into ``dense``.

    Returns -1 as soon as the pair provably scores below ``exp(log_floor)``;
    pass ``-inf`` to score in full.
    """
    li = lengths[i]
    lj = lengths[j]
    order = min(ORDERS, li, lj)
    si = 0.0
    sj = 0.0
    for n in range(1, order + 1):
        k = n - 1
        m = 0
        for t in range(offsets[j * ORDERS + k], offsets[j * ORDERS + k + 1]):
            m += min(dense[ids[t]], counts[t])
        if m == 0:
            if smoothing <= 0.0:
                return 0.0
            lm = log(smoothing)
        else:
            lm = lg[m]
        si += lm - lg[li - n + 1]
        sj += lm - lg[lj - n + 1]
        if n < order and log_floor > -np.inf:
            a, b = _bound_logs(m, n, order, li, lj, si, sj, lg)
            # the mean of the two directions is at most the larger one;
            # the margin guards against rounding in the bound itself
            if max(a, b) + 1e-9 < log_floor:
                return -1.0
    b_ij = exp(si / order + min(0.0, 1.0 - lj / li))
    b_ji = exp(sj / order + min(0.0, 1.0 - li / lj))
    return (b_ij + b_ji) / 2


@njit(cache=True, nogil=True)
def pair_sim(i, j, lengths, offsets, ids, counts, n_ids, smoothing):
    dense = np.zeros(n_ids, dtype=np.int32)
    _scatter(dense, i, offsets, ids, counts, 1)
    lg = log_table(max(lengths[i], lengths[j]))
    return _sim_dense(dense, i, j, lengths, offsets, ids, counts, smoothing, -np.inf, lg)


@njit(cache=True, nogil=True)
def _better(s, j, best, arg):
    # higher similarity wins; ties go to the lower index
    return s > best or (s == best and j < arg)


@njit(cache=True, parallel=True)
def group_nearest(lengths, offsets, ids, counts, n_ids, post_ptr, post_idx, prune, smoothing):
    """Per member: best similarity to any other member and the lowest index attaining it.

    Each unordered pair is scored once. Rows are split into a fixed number of
    chunks, each keeping its own best-so-far arrays; the final reduction
    (max, then lowest index) is order independent, so results do not depend
    on the thread count.
    """
    m = lengths.size
    lg = log_table(lengths.max() if m else 1)
    n_chunks = min(CHUNKS, max(m, 1))
    bounded = smoothing <= 0.0
    loc_best = np.full((n_chunks, m), -1.0)
    loc_arg = np.full((n_chunks, m), -1, dtype=np.int64)
    # log of the best so far; -inf until a positive similarity is seen
    loc_log = np.full((n_chunks, m), -np.inf)
    for c in prange(n_chunks):
        dense = np.zeros(n_ids, dtype=np.int32)
        mark = np.zeros(m, dtype=np.uint8)
        bb = loc_best[c]
        aa = loc_arg[c]
        ll = loc_log[c]
        # interleaved rows balance the triangular workload
        for i in range(c, m, n_chunks):
            _scatter(dense, i, offsets, ids, counts, 1)
            if prune:
                for t in range(offsets[i * ORDERS], offsets[i * ORDERS + 1]):
                    g = ids[t]
                    for p in range(post_ptr[g], post_ptr[g + 1]):
                        mark[post_idx[p]] = 1
            for j in range(i + 1, m):
                if prune:
                    if mark[j] == 0:
                        continue
                    mark[j] = 0
                log_floor = min(ll[i], ll[j]) if bounded else -np.inf
                s = _sim_dense(dense, i, j, lengths, offsets, ids, counts, smoothing, log_floor, lg)
                if s < 0.0:
                    continue
                if _better(s, j, bb[i], aa[i]) or aa[i] < 0:
                    if s > bb[i] and s > 0.0:
                        ll[i] = log(s)
                    bb[i] = s
                    aa[i] = j
                if _better(s, i, bb[j], aa[j]) or aa[j] < 0:
                    if s > bb[j] and s > 0.0:
                        ll[j] = log(s)
                    bb[j] = s
                    aa[j] = i
            if prune:
                for j in range(0, i + 1):
                    mark[j] = 0
            _scatter(dense, i, offsets, ids, counts, 0)
    best = np.zeros(m, dtype=np.float64)
    arg = np.full(m, -1, dtype=np.int64)
    for i in prange(m):
        b = -1.0
        a = -1
        for c in range(n_chunks):
            if loc_arg[c, i] >= 0 and (a < 0 or _better(loc_best[c, i], loc_arg[c, i], b, a)):
                b = loc_best[c, i]
                a = loc_arg[c, i]
        if m > 1 and b <= 0.0:
            b = 0.0
            a = 1 if i == 0 else 0
        best[i] = b if m > 1 else 0.0
        arg[i] = a
    return best, arg


@njit(cache=True, parallel=True)
def cross_nearest(n_test, lengths, offsets, ids, counts, n_ids, post_ptr, post_idx, prune, smoothing):
    """Members ``[0, n_test)`` against members ``[n_test, M)``; no self-exclusion."""
    m = lengths.size
    lg = log_table(lengths.max() if m else 1)
    best = np.zeros(n_test, dtype=np.float64)
    arg = np.full(n_test, -1, dtype=np.int64)
    n_chunks = min(CHUNKS, max(n_test, 1))
    for c in prange(n_chunks):
        dense = np.zeros(n_ids, dtype=np.int32)
        mark = np.zeros(m, dtype=np.uint8)
        for i in range(c, n_test, n_chunks):
            _scatter(dense, i, offsets, ids, counts, 1)
            if prune:
                for t in range(offsets[i * ORDERS], offsets[i * ORDERS + 1]):
                    g = ids[t]
                    for p in range(post_ptr[g], post_ptr[g + 1]):
                        mark[post_idx[p]] = 1
            b = -1.0
            a = -1
            log_b = -np.inf
            for j in range(n_test, m):
                if prune:
                    if mark[j] == 0:
                        continue
                    mark[j] = 0
                s = _sim_dense(dense, i, j, lengths, offsets, ids, counts, smoothing,
                               log_b if smoothing <= 0.0 else -np.inf, lg)
                if s > b:
                    b = s
                    a = j
                    if s > 0.0:
                        log_b = log(s)
            if prune:
                for j in range(0, n_test):
                    mark[j] = 0
            _scatter(dense, i, offsets, ids, counts, 0)
            if b <= 0.0:
                b = 0.0
                a = n_test
            best[i] = b
            arg[i] = a - n_test
    return best, arg


@njit(cache=True, parallel=True)
def exhaustive_nearest(n_test, lengths, offsets, ids, counts, n_ids, smoothing):
    """Reference path: every ordered pair scored in full, no postings and no bound.

    ``n_test == 0`` scores each member against all others; otherwise members
    ``[0, n_test)`` are scored against ``[n_test, M)``. Returned neighbour
    indices are relative to the start of the candidate range.
    """
    m = lengths.size
    lg = log_table(lengths.max() if m else 1)
    rows = n_test if n_test > 0 else m
    lo = n_test
    best = np.zeros(rows, dtype=np.float64)
    arg = np.full(rows, -1, dtype=np.int64)
    for i in prange(rows):
        dense = np.zeros(n_ids, dtype=np.int32)
        _scatter(dense, i, offsets, ids, counts, 1)
        b = -1.0
        a = -1
        for j in range(lo, m):
            if j == i:
                continue
            s = _sim_dense(dense, i, j, lengths, offsets, ids, counts, smoothing, -np.inf, lg)
            if s > b:
                b = s
                a = j
        if a >= 0:
            best[i] = b
            arg[i] = a - lo
    return best, arg


def max_threads() -> int:
    return numba.config.NUMBA_NUM_THREADS


def set_threads(n: int) -> int:
    """Set the worker count (0 = all available); returns the count in effect."""
    limit = max_threads()
    n = limit if n <= 0 else min(n, limit)
    numba.set_num_threads(n)
    return n
