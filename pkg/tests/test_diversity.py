import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from mwpdiv import _kernels
from mwpdiv.corpus import Corpus, ProblemRecord
from mwpdiv.diversity import (InvariantError, corpus_diversity, cross_set_diversity, dedup_report,
                              group_scores, histogram, ld_scores, make_report, sd_scores,
                              verify_report)
from mwpdiv.normalization import NormalizedProblem, normalize_problem
from mwpdiv.similarity import sym_sim

import oracles


def np_(pid, toks, tags=None):
    toks = tuple(toks)
    return NormalizedProblem(pid, toks, tuple(tags) if tags is not None else toks)


def three_group():
    return [np_("p1", "a b c d e".split()), np_("p2", "a b c d e".split()), np_("p3", "x y z".split())]


class TestLdScores:
    def test_three_group(self):
        s = ld_scores(three_group())
        assert [s[k].score for k in ("p1", "p2", "p3")] == [0.0, 0.0, 1.0]
        assert s["p1"].nearest_id == "p2" and s["p2"].nearest_id == "p1"

    def test_singleton(self):
        s = ld_scores([np_("only", ["a"])])
        assert s["only"].score == 1.0 and s["only"].nearest_id is None

    def test_train_pole_family(self, train_pole):
        s = ld_scores([normalize_problem(p) for p in train_pole])
        assert all(v.score == 0.0 for v in s.values())

    def test_tie_break_lowest_id(self):
        group = [np_("c", "a b".split()), np_("b", "a b".split()), np_("a", "a b".split())]
        s = ld_scores(group)
        assert s["c"].nearest_id == "a" and s["a"].nearest_id == "b"

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            ld_scores([np_("a", []), np_("b", ["x"])])


class TestSdScores:
    def test_channel_separation(self):
        group = [np_("a", ["x"], ["NN", "VBZ"]), np_("b", ["y"], ["NN", "VBZ"])]
        assert all(v.score == 0.0 for v in sd_scores(group).values())

    def test_disjoint_tags(self):
        group = [np_("a", ["x"], ["NN"]), np_("b", ["x"], ["VBZ"])]
        assert all(v.score == 1.0 for v in sd_scores(group).values())

    def test_same_pattern_sentences(self):
        group = [normalize_problem(ProblemRecord(id="m", body="Mary has 5 books.")),
                 normalize_problem(ProblemRecord(id="j", body="John eats 3 apples."))]
        assert group[0].pos_tokens == group[1].pos_tokens == ("NNP", "VBZ", "CD", "NNS", ".")
        assert all(v.score == 0.0 for v in sd_scores(group).values())


class TestCrossSet:
    def test_hand_worked(self):
        r = cross_set_diversity([np_("t", list("abc"))], [np_("r", list("abcd"))])
        assert r.scores["t"].score == pytest.approx(0.326754082239387084, abs=1e-12)

    def test_self(self):
        g = three_group()
        assert all(v.score == 0.0 for v in cross_set_diversity(g, g).scores.values())

    def test_disjoint(self):
        r = cross_set_diversity([np_("t", list("abc"))], [np_("r", list("xyz")), np_("s", list("uvw"))])
        assert r.scores["t"].score == 1.0 and r.cld == 1.0

    def test_empty_train(self):
        with pytest.raises(ValueError):
            cross_set_diversity([np_("t", ["a"])], [])


class TestHistogram:
    def test_bins(self):
        h = histogram([0.0, 0.5, 1.0])
        assert h[0] == h[10] == h[19] == 1 and sum(h) == 3

    def test_boundary(self):
        h = histogram([0.049999, 0.05])
        assert h[0] == 1 and h[1] == 1

    def test_empty(self):
        assert histogram([]) == (0,) * 20

    @pytest.mark.parametrize("bad", [-0.1, 1.01, float("nan")])
    def test_out_of_range(self, bad):
        with pytest.raises(ValueError):
            histogram([bad])


def corpus_of(texts, types=None):
    return Corpus("c", tuple(ProblemRecord(id=f"q{i:02d}", body=t, problem_type=(types[i] if types else None))
                             for i, t in enumerate(texts)))


class TestCorpusDiversity:
    def test_three_group_cld(self):
        r = make_report("lexical", ld_scores(three_group()))
        assert r.cld == pytest.approx(1 / 3, abs=1e-15)
        assert r.zero_fraction == pytest.approx(2 / 3)

    def test_duplicated_wholesale(self):
        texts = ["Tim has 3 apples.", "The train crosses a bridge quickly.", "Sara paints 4 red fences."]
        r = corpus_diversity(corpus_of(texts + texts))
        assert r.cld == 0.0 and r.zero_fraction == 1.0

    def test_groups_pool_over_problems(self):
        texts = ["Tim has 3 apples.", "Tim has 5 apples.", "Cats purr loudly.", "Dogs bark at night.",
                 "Birds sing songs."]
        types = ["Addition", "Addition", "Ratio", "Ratio", "Ratio"]
        r = corpus_diversity(corpus_of(texts, types), use_types=True)
        assert r.group_sizes == (2, 3)
        assert r.cld == pytest.approx(3 / 5)

    def test_empty(self):
        with pytest.raises(ValueError, match="empty corpus"):
            corpus_diversity(Corpus("c", ()))

    def test_report_invariant_checked(self):
        r = make_report("lexical", ld_scores(three_group()))
        with pytest.raises(InvariantError):
            verify_report(dataclasses.replace(r, cld=0.5))
        with pytest.raises(InvariantError):
            verify_report(dataclasses.replace(r, histogram=(0,) * 20))


class TestDedup:
    def test_train_pole(self, train_pole):
        flagged = dedup_report(Corpus("f", tuple(train_pole)), threshold=0.1)
        assert len(flagged) == 15 and all(s.score == 0.0 for s in flagged)

    def test_diverse(self):
        texts = ["Tim has 3 apples.", "The train crosses a bridge.", "Sara paints fences."]
        assert dedup_report(corpus_of(texts), threshold=0.1) == []

    def test_three_group(self):
        r = make_report("lexical", ld_scores(three_group()))
        assert [s.id for s in dedup_report(r, threshold=0.5)] == ["p1", "p2"]

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            dedup_report(make_report("lexical", ld_scores(three_group())), threshold=1.5)


vocab = [f"w{i}" for i in range(30)]
groups = st.lists(st.lists(st.sampled_from(vocab[:12]), min_size=1, max_size=10), min_size=1, max_size=25)


def as_group(seqs):
    return [np_(f"p{i:03d}", s) for i, s in enumerate(seqs)]


class TestProperties:
    @settings(max_examples=120, deadline=None)
    @given(groups)
    def test_matches_brute_force(self, seqs):
        group = as_group(seqs)
        got = group_scores(group)
        want = oracles.brute_scores({p.id: p.norm_tokens for p in group})
        for pid, (score, nearest) in want.items():
            assert got[pid].score == pytest.approx(score, abs=1e-12)
            # the nearest neighbour must attain the best similarity
            if nearest is not None:
                best = max(sym_sim(group[int(pid[1:])], q) for q in group if q.id != pid)
                assert sym_sim(group[int(pid[1:])], group[int(got[pid].nearest_id[1:])]) == best

    @settings(max_examples=120, deadline=None)
    @given(groups)
    def test_kernel_bit_identical_to_python(self, seqs):
        group = as_group(seqs)
        got = group_scores(group)
        for p in group:
            others = [q for q in group if q.id != p.id]
            if not others:
                continue
            sims = [sym_sim(p, q) for q in others]
            best = max(sims)
            assert got[p.id].score == 1.0 - best
            assert got[p.id].nearest_id == others[sims.index(best)].id

    @settings(max_examples=80, deadline=None)
    @given(groups)
    def test_pruned_equals_exhaustive(self, seqs):
        group = as_group(seqs)
        assert group_scores(group, prune=True) == group_scores(group, prune=False)

    @settings(max_examples=60, deadline=None)
    @given(groups, st.floats(0.01, 1.0))
    def test_smoothing_scores_in_range(self, seqs, smoothing):
        for s in group_scores(as_group(seqs), smoothing=smoothing).values():
            assert 0.0 <= s.score <= 1.0

    @settings(max_examples=60, deadline=None)
    @given(groups, st.data())
    def test_duplicate_forces_zero(self, seqs, data):
        group = as_group(seqs)
        k = data.draw(st.integers(0, len(group) - 1))
        dup = np_("zz-dup", group[k].norm_tokens)
        s = ld_scores(group + [dup])
        assert s[group[k].id].score == 0.0 and s["zz-dup"].score == 0.0

    @settings(max_examples=60, deadline=None)
    @given(groups, st.randoms(use_true_random=False))
    def test_cld_permutation_and_renaming_invariant(self, seqs, rng):
        group = as_group(seqs)
        base = make_report("lexical", ld_scores(group)).cld
        shuffled = list(group)
        rng.shuffle(shuffled)
        renamed = [np_(f"r{rng.random()}-{i}", p.norm_tokens) for i, p in enumerate(shuffled)]
        assert make_report("lexical", ld_scores(renamed)).cld == pytest.approx(base, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 25))
    def test_disjoint_vocab_cld_one(self, n):
        group = [np_(f"d{i}", [f"u{i}a", f"u{i}b"]) for i in range(n)]
        assert make_report("lexical", ld_scores(group)).cld == 1.0

    @settings(max_examples=40, deadline=None)
    @given(groups)
    def test_cross_self_zero(self, seqs):
        g = as_group(seqs)
        assert all(v.score == 0.0 for v in cross_set_diversity(g, g).scores.values())


class TestThreads:
    def test_thread_count_does_not_change_results(self):
        rng = random.Random(5)
        group = [np_(f"p{i:04d}", [rng.choice(vocab) for _ in range(rng.randint(1, 15))]) for i in range(600)]
        outputs = []
        for n in (1, 4, 8):
            used = _kernels.set_threads(n)
            assert used == min(n, _kernels.max_threads())
            outputs.append(group_scores(group))
        _kernels.set_threads(0)
        assert outputs[0] == outputs[1] == outputs[2]
