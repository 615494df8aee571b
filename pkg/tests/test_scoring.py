import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from endsum.corpus import Corpus, ProcessedTweet
from endsum.scoring import (
    UndefinedSimilarityError,
    diversity,
    dump_scores_csv,
    entropy_scores,
    karci_entropy,
    summary_keyword_union,
)
from endsum.simgraph import build_overlap_table
from endsum.synthetic import random_keyword_corpus
from oracles import entropies_exact, karci_entropy_exact


def kw_tweet(*kws, index=0):
    return ProcessedTweet(index, str(index), tuple(kws), frozenset(kws))


def test_karci_entropy_examples():
    assert karci_entropy([1.0], 0.5) == 0.0
    assert karci_entropy([0.5, 0.5], 0.5) == pytest.approx(math.sqrt(2), abs=1e-12)
    # 0.25**0.5 * 2 + 0.75**0.5 * log2(4/3), evaluated at 50 digits
    assert karci_entropy([0.25, 0.75], 0.5) == pytest.approx(1.3594330178986445, abs=1e-12)
    assert karci_entropy([], 0.5) == 0.0
    assert karci_entropy([0.25, 0.75], 0.5) == pytest.approx(karci_entropy_exact([0.25, 0.75], 0.5), abs=1e-12)


@pytest.mark.parametrize("gamma", [0, -0.5, float("nan"), float("inf")])
def test_karci_entropy_rejects_bad_gamma(gamma):
    with pytest.raises(ValueError):
        karci_entropy([0.5, 0.5], gamma)


def test_karci_entropy_rejects_out_of_range_probability():
    with pytest.raises(ValueError):
        karci_entropy([0.0, 1.0], 0.5)


def test_karci_entropy_order_independent():
    p = [0.1, 0.2, 0.3, 0.4]
    assert karci_entropy(p, 0.5) == karci_entropy(p[::-1], 0.5)


probability_rows = st.lists(st.integers(1, 50), min_size=1, max_size=12).map(lambda c: [x / sum(c) for x in c])


@given(probability_rows, st.floats(0.05, 3.0))
def test_karci_entropy_nonnegative(row, gamma):
    assert karci_entropy(row, gamma) >= 0


@given(st.integers(2, 10), st.lists(st.floats(0.01, 1.0), min_size=10, max_size=10))
def test_uniform_row_is_maximal(n, weights):
    w = weights[:n]
    row = [x / sum(w) for x in w]
    assert karci_entropy([1 / n] * n, 0.5) >= karci_entropy(row, 0.5) - 1e-12


def test_entropy_scores_examples():
    disjoint = build_overlap_table(Corpus.from_keywords([{"a"}, {"b"}, {"c"}]))
    assert entropy_scores(disjoint, 0.5).values.tolist() == [0.0, 0.0, 0.0]
    pair = build_overlap_table(Corpus.from_keywords([{"a", "b"}, {"b", "c"}]))
    assert entropy_scores(pair, 0.5).values.tolist() == [0.0, 0.0]


def test_entropy_scores_match_oracle(rng):
    for _ in range(30):
        corpus = random_keyword_corpus(rng, int(rng.integers(1, 51)))
        sets = [t.keywords for t in corpus]
        for gamma in (0.5, 1.3):
            got = entropy_scores(build_overlap_table(corpus), gamma)
            assert got.gamma == gamma
            assert np.max(np.abs(got.values - np.array(entropies_exact(sets, gamma)))) <= 1e-12


def test_entropy_zero_iff_empty_row(rng):
    corpus = random_keyword_corpus(rng, 40, vocab_size=40, max_keywords=2)
    table = build_overlap_table(corpus)
    scores = entropy_scores(table)
    for i in range(table.m):
        if table.row_sum(i) == 0:
            assert scores[i] == 0.0


def test_entropy_scores_rejects_bad_gamma():
    with pytest.raises(ValueError):
        entropy_scores(build_overlap_table(Corpus.from_keywords([{"a"}])), 0.0)


def test_summary_keyword_union():
    corpus = Corpus.from_keywords([{"a", "b"}, {"b", "c"}, {"z"}])
    assert summary_keyword_union([], corpus) == frozenset()
    assert summary_keyword_union([0], corpus) == {"a", "b"}
    assert summary_keyword_union([0, 1], corpus) == {"a", "b", "c"}


def test_diversity_examples():
    d = diversity(kw_tweet("a", "b"), set())
    assert (d.sim, d.diversity) == (0.0, 1.0)
    d = diversity(kw_tweet("a", "b"), {"a", "b", "c"})
    assert (d.sim, d.diversity) == (1.0, 0.0)
    d = diversity(kw_tweet("a", "b", "c", "d"), {"a", "c", "x"})
    assert (d.sim, d.diversity) == (0.5, 0.5)


def test_diversity_requires_keywords():
    with pytest.raises(UndefinedSimilarityError):
        diversity(kw_tweet(), {"a"})


small_sets = st.frozensets(st.sampled_from("abcdefghij"), min_size=1)


@given(small_sets, st.lists(st.frozensets(st.sampled_from("abcdefghij")), max_size=6))
def test_diversity_properties(kws, picks):
    tweet = kw_tweet(*kws)
    union: set = set()
    last = 1.0
    for pick in picks:
        union |= pick
        d = diversity(tweet, union)
        assert d.sim + d.diversity == 1.0
        assert 0.0 <= d.sim <= 1.0
        assert d.diversity <= last
        assert (d.diversity == 1.0) == (not kws & union)
        last = d.diversity


def test_dump_scores_csv(tmp_path):
    corpus = Corpus.from_keywords([{"a", "b"}, {"b"}, {"a"}])
    scores = entropy_scores(build_overlap_table(corpus))
    path = tmp_path / "s.csv"
    dump_scores_csv(corpus, scores, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "index,id,entropy"
    assert [ln.split(",")[0] for ln in lines[1:]] == ["0", "1", "2"]
    assert float(lines[1].split(",")[2]) == pytest.approx(math.sqrt(2))
