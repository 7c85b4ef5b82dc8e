"""Per-problem diversity scores (LD/SD), corpus means, histograms and curation lists."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .corpus import Corpus, group_by_type
from .normalization import NormalizedProblem, normalize_problem
from .similarity import CHANNELS

BINS = 20


class InvariantError(AssertionError):
    """A computed report violated one of its own invariants."""


@dataclass(frozen=True)
class ScoredProblem:
    id: str
    score: float
    nearest_id: str | None


@dataclass(frozen=True)
class DiversityReport:
    channel: str
    scores: Mapping[str, ScoredProblem]
    cld: float
    zero_fraction: float
    histogram: tuple[int, ...]
    group_count: int = 1
    # pooled over type groups when produced by corpus_diversity
    group_sizes: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.scores)

    def rows(self):
        for pid in sorted(self.scores):
            s = self.scores[pid]
            yield pid, s.score, s.nearest_id

    def summary(self) -> dict:
        return {
            "channel": self.channel,
            "problems": len(self.scores),
            "groups": self.group_count,
            "cld": self.cld,
            "zero_fraction": self.zero_fraction,
            "histogram": list(self.histogram),
        }


# Same shape; scored test-vs-train.
CrossSetReport = DiversityReport


def _check_channel(channel: str) -> None:
    if channel not in CHANNELS:
        raise ValueError(f"unknown channel {channel!r}; expected one of {CHANNELS}")


def _sequences(group: Sequence[NormalizedProblem], channel: str):
    seqs = []
    for p in group:
        seq = p.channel(channel)
        if not seq:
            raise ValueError(f"problem {p.id!r} has an empty {channel} sequence")
        seqs.append(seq)
    return seqs


def group_scores(group: Sequence[NormalizedProblem], channel: str = "lexical", *,
                 prune: bool = True, smoothing: float = 0.0) -> dict[str, ScoredProblem]:
    """Score every member: 1 minus its best symmetric BLEU against any other member.

    Members are processed in id order, so the nearest neighbour reported for
    tied similarities is the lowest id. A singleton scores 1 with no neighbour.
    Pruning is disabled automatically when smoothing is on, since smoothed
    BLEU is non-zero even for pairs with no shared unigram. ``prune=False``
    scores every ordered pair in full and serves as the reference path.
    """
    _check_channel(channel)
    if not group:
        return {}
    members = sorted(group, key=lambda p: p.id)
    ids = [p.id for p in members]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate ids in group")
    prof = _kernels.build_profiles(_sequences(members, channel))
    if prune:
        best, arg = _kernels.group_nearest(
            prof.lengths, prof.offsets, prof.ids, prof.counts, prof.n_ids, prof.post_ptr, prof.post_idx,
            smoothing <= 0.0, float(smoothing),
        )
    else:
        best, arg = _kernels.exhaustive_nearest(
            0, prof.lengths, prof.offsets, prof.ids, prof.counts, prof.n_ids, float(smoothing))
    out = {}
    for k, pid in enumerate(ids):
        j = int(arg[k])
        out[pid] = ScoredProblem(pid, 1.0 - float(best[k]), ids[j] if j >= 0 else None)
    return out


def ld_scores(group, **kw) -> dict[str, ScoredProblem]:
    return group_scores(group, "lexical", **kw)


def sd_scores(group, **kw) -> dict[str, ScoredProblem]:
    return group_scores(group, "syntactic", **kw)


def histogram(scores) -> tuple[int, ...]:
    """Counts over 20 equal-width bins on [0, 1]; the last bin is closed."""
    counts = [0] * BINS
    for s in scores:
        if not (0.0 <= s <= 1.0) or math.isnan(s):
            raise ValueError(f"score {s!r} outside [0, 1]")
        counts[min(int(math.floor(s * BINS)), BINS - 1)] += 1
    return tuple(counts)


def bin_edges() -> list[tuple[float, float]]:
    return [(b / BINS, (b + 1) / BINS) for b in range(BINS)]


def make_report(channel: str, scores: Mapping[str, ScoredProblem], group_sizes=()) -> DiversityReport:
    values = [scores[pid].score for pid in sorted(scores)]
    n = len(values)
    cld = math.fsum(values) / n if n else float("nan")
    zero = sum(1 for v in values if v == 0.0) / n if n else float("nan")
    report = DiversityReport(
        channel=channel,
        scores=dict(sorted(scores.items())),
        cld=cld,
        zero_fraction=zero,
        histogram=histogram(values),
        group_count=len(group_sizes) if group_sizes else 1,
        group_sizes=tuple(group_sizes),
    )
    verify_report(report)
    return report


def verify_report(report: DiversityReport) -> None:
    n = len(report.scores)
    if sum(report.histogram) != n:
        raise InvariantError("histogram counts do not sum to the number of scored problems")
    values = [s.score for s in report.scores.values()]
    if any(not 0.0 <= v <= 1.0 for v in values):
        raise InvariantError("score outside [0, 1]")
    if n and report.cld != math.fsum(sorted_values(report)) / n:
        raise InvariantError("cld is not the mean of the per-problem scores")


def sorted_values(report: DiversityReport):
    return [report.scores[pid].score for pid in sorted(report.scores)]


def diversity_from_groups(groups: Sequence[Sequence[NormalizedProblem]], channel: str, *,
                          prune: bool = True, smoothing: float = 0.0) -> DiversityReport:
    pooled: dict[str, ScoredProblem] = {}
    for group in groups:
        scored = group_scores(group, channel, prune=prune, smoothing=smoothing)
        overlap = pooled.keys() & scored.keys()
        if overlap:
            raise ValueError(f"problem ids in more than one group: {sorted(overlap)[:5]}")
        pooled.update(scored)
    return make_report(channel, pooled, [len(g) for g in groups])


def corpus_diversity(corpus: Corpus, channel: str = "lexical", use_types: bool = True, *,
                     sidecar=None, prune: bool = True, smoothing: float = 0.0,
                     normalized: Mapping[str, NormalizedProblem] | None = None) -> DiversityReport:
    """Score a corpus per problem-type group and pool the results.

    The corpus-level mean is over problems, not over groups.
    """
    _check_channel(channel)
    if not len(corpus):
        raise ValueError("empty corpus")
    groups = group_by_type(corpus, use_types)
    if normalized is None:
        normalized = {p.id: normalize_problem(p, sidecar) for p in corpus}
    return diversity_from_groups(
        [[normalized[p.id] for p in g] for g in groups], channel, prune=prune, smoothing=smoothing,
    )


def cross_set_diversity(test: Sequence[NormalizedProblem], train: Sequence[NormalizedProblem],
                        channel: str = "lexical", *, prune: bool = True,
                        smoothing: float = 0.0) -> CrossSetReport:
    """Score each test problem against the whole training set (no self-exclusion)."""
    _check_channel(channel)
    if not train:
        raise ValueError("empty training set")
    if not test:
        raise ValueError("empty test set")
    test = sorted(test, key=lambda p: p.id)
    train = sorted(train, key=lambda p: p.id)
    prof = _kernels.build_profiles(_sequences(test, channel) + _sequences(train, channel))
    if prune:
        best, arg = _kernels.cross_nearest(
            len(test), prof.lengths, prof.offsets, prof.ids, prof.counts, prof.n_ids, prof.post_ptr,
            prof.post_idx, smoothing <= 0.0, float(smoothing),
        )
    else:
        best, arg = _kernels.exhaustive_nearest(
            len(test), prof.lengths, prof.offsets, prof.ids, prof.counts, prof.n_ids, float(smoothing))
    scores = {
        p.id: ScoredProblem(p.id, 1.0 - float(best[k]), train[int(arg[k])].id)
        for k, p in enumerate(test)
    }
    return make_report(channel, scores)


def dedup_report(report_or_corpus, channel: str = "lexical", threshold: float = 0.1,
                 use_types: bool = True, **kw) -> list[ScoredProblem]:
    """Problems scoring below ``threshold``, lowest score first, ties by id.

    Accepts a finished report or a corpus (which is scored first).
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold {threshold!r} outside [0, 1]")
    if isinstance(report_or_corpus, DiversityReport):
        report = report_or_corpus
    else:
        report = corpus_diversity(report_or_corpus, channel, use_types, **kw)
    flagged = [s for s in report.scores.values() if s.score < threshold]
    return sorted(flagged, key=lambda s: (s.score, s.id))


def scores_array(report: DiversityReport) -> np.ndarray:
    return np.asarray(sorted_values(report), dtype=np.float64)
