"""Sentence-level BLEU, the symmetric pair similarity, and a unigram inverted index."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

MAX_ORDER = 4
CHANNELS = ("lexical", "syntactic")


def ngrams(tokens: Sequence[str], n: int):
    return zip(*(tokens[i:] for i in range(n)))


def bleu(candidate: Sequence[str], reference: Sequence[str], smoothing: float = 0.0) -> float:
    """Unsmoothed single-reference sentence BLEU with n-grams up to order 4.

    The effective order is ``min(4, len(candidate), len(reference))`` so very
    short sequences still compare. Any zero clipped precision gives 0 unless
    ``smoothing`` > 0, which adds that constant to each zero match count.
    """
    if not candidate or not reference:
        raise ValueError("empty sequence")
    c, r = len(candidate), len(reference)
    order = min(MAX_ORDER, c, r)
    log_sum = 0.0
    for n in range(1, order + 1):
        cand = Counter(ngrams(candidate, n))
        ref = Counter(ngrams(reference, n))
        matches = sum(min(count, ref[g]) for g, count in cand.items())
        if matches == 0:
            if smoothing <= 0:
                return 0.0
            log_sum += math.log(smoothing) - math.log(c - n + 1)
        else:
            log_sum += math.log(matches) - math.log(c - n + 1)
    return math.exp(log_sum / order + min(0.0, 1.0 - r / c))


def _seq(problem, channel: str) -> Sequence[str]:
    if isinstance(problem, (list, tuple)):
        return problem
    return problem.channel(channel)


def sym_sim(pi, pj, channel: str = "lexical", smoothing: float = 0.0) -> float:
    """Mean of BLEU in both directions over one channel of two problems."""
    a, b = _seq(pi, channel), _seq(pj, channel)
    return (bleu(a, b, smoothing) + bleu(b, a, smoothing)) / 2


@dataclass(frozen=True)
class SimilarityIndex:
    """Unigram -> sorted indices of the group members containing it."""

    postings: dict
    sequences: tuple

    def __len__(self) -> int:
        return len(self.sequences)


def build_index(group, channel: str = "lexical") -> SimilarityIndex:
    seqs = tuple(tuple(_seq(p, channel)) for p in group)
    postings: dict[str, list[int]] = {}
    for i, seq in enumerate(seqs):
        for g in dict.fromkeys(seq):
            postings.setdefault(g, []).append(i)
    return SimilarityIndex({g: tuple(ix) for g, ix in postings.items()}, seqs)


def candidates(index: SimilarityIndex, i: int) -> set[int]:
    """Members sharing at least one unigram with member ``i``.

    Every other pair has zero unigram precision in both directions, hence a
    similarity of exactly 0 under unsmoothed BLEU.
    """
    out: set[int] = set()
    for g in set(index.sequences[i]):
        out.update(index.postings[g])
    out.discard(i)
    return out
