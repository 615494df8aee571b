"""Greedy entropy + diversity tweet selection, and a frequency baseline."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from endsum.corpus import Corpus
from endsum.scoring import EntropyScores, diversity, entropy_scores
from endsum.simgraph import OverlapTable, build_overlap_table


class EmptyCorpusError(ValueError):
    """No tweet is eligible for selection."""


class ExhaustedError(RuntimeError):
    """``select_next`` was called with no unselected candidate left."""


@dataclass(frozen=True)
class EnDConfig:
    """Weights of the objective. Equal alpha and beta treat coverage and novelty alike."""

    summary_length: int
    alpha: float = 0.5
    beta: float = 0.5
    gamma: float = 0.5

    def __post_init__(self):
        if isinstance(self.summary_length, bool) or not isinstance(self.summary_length, int):
            raise ValueError("summary_length must be an integer")
        if self.summary_length < 1:
            raise ValueError(f"summary_length must be >= 1, got {self.summary_length}")
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be a finite number >= 0, got {v!r}")
        if not self.alpha + self.beta > 0:
            raise ValueError("alpha + beta must be positive")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise ValueError(f"gamma must be a finite number > 0, got {self.gamma!r}")


@dataclass
class SummaryState:
    target: int
    selected: list[int] = field(default_factory=list)
    keyword_union: set[str] = field(default_factory=set)
    # per pick: (entropy, diversity at selection, score)
    trace: list[tuple[float, float, float]] = field(default_factory=list)

    def add(self, i: int, corpus: Corpus, entropy: float = 0.0, div: float = 0.0, score: float = 0.0) -> None:
        if i in self.selected:
            raise ValueError(f"tweet {i} already selected")
        self.selected.append(i)
        self.keyword_union |= corpus.tweets[i].keywords
        self.trace.append((entropy, div, score))

    def __len__(self) -> int:
        return len(self.selected)


def combined_score(entropy: float, diversity: float, config: EnDConfig) -> float:
    return config.alpha * entropy + config.beta * diversity


def candidates(corpus: Corpus) -> list[int]:
    return [t.index for t in corpus.tweets if t.keywords]


def select_next(state: SummaryState, corpus: Corpus, entropies: EntropyScores, config: EnDConfig) -> int:
    """Index of the unselected candidate with the highest combined score.

    Scans candidates in index order and keeps the first maximum, so ties go to
    the lowest index.
    """
    chosen = set(state.selected)
    best, best_score = -1, -math.inf
    for i in candidates(corpus):
        if i in chosen:
            continue
        d = diversity(corpus.tweets[i], state.keyword_union).diversity
        s = combined_score(entropies[i], d, config)
        if s > best_score:
            best, best_score = i, s
    if best < 0:
        raise ExhaustedError("no unselected candidates remain")
    return best


def _check_indices(corpus: Corpus) -> None:
    for pos, tweet in enumerate(corpus.tweets):
        if tweet.index != pos:
            raise ValueError(f"tweet at position {pos} carries index {tweet.index}")


def summarize(
    corpus: Corpus,
    config: EnDConfig,
    table: OverlapTable | None = None,
    entropies: EntropyScores | None = None,
) -> SummaryState:
    """Run the greedy loop until ``min(L, #candidates)`` tweets are chosen.

    Entropies are fixed for the corpus. Diversity is tracked incrementally:
    ``hits[j]`` counts tweet j's keywords already in the summary union, so each
    new union keyword touches only its postings. Selection is identical to
    calling :func:`select_next` repeatedly.
    """
    _check_indices(corpus)
    pool = candidates(corpus)
    if not pool:
        raise EmptyCorpusError("no candidate tweets with keywords")
    if entropies is None:
        if table is None:
            table = build_overlap_table(corpus)
        entropies = entropy_scores(table, config.gamma)

    m = corpus.m
    lengths = np.array([len(t.keywords) for t in corpus.tweets], dtype=np.float64)
    postings: dict[str, list[int]] = {}
    for t in corpus.tweets:
        for kw in t.keywords:
            postings.setdefault(kw, []).append(t.index)
    hits = np.zeros(m, dtype=np.int64)
    available = lengths > 0
    ent = np.asarray(entropies.values, dtype=np.float64)
    weighted_entropy = config.alpha * ent

    state = SummaryState(target=config.summary_length)
    for _ in range(min(config.summary_length, len(pool))):
        with np.errstate(divide="ignore", invalid="ignore"):
            sim = hits / lengths
        div = 1.0 - sim
        scores = weighted_entropy + config.beta * div
        scores[~available] = -np.inf
        best = int(np.argmax(scores))
        fresh = corpus.tweets[best].keywords - state.keyword_union
        state.add(best, corpus, float(ent[best]), float(div[best]), float(scores[best]))
        available[best] = False
        for kw in fresh:
            hits[postings[kw]] += 1
    return state


def frequency_scores(corpus: Corpus) -> list[float]:
    """Mean corpus document frequency of each tweet's keywords (0 for keyword-less tweets)."""
    df = Counter(kw for t in corpus.tweets for kw in t.keywords)
    return [sum(df[kw] for kw in t.keywords) / len(t.keywords) if t.keywords else 0.0 for t in corpus.tweets]


def baseline_frequency(corpus: Corpus, summary_length: int) -> SummaryState:
    """Top-L tweets by mean keyword document frequency, no redundancy control."""
    if isinstance(summary_length, bool) or not isinstance(summary_length, int) or summary_length < 1:
        raise ValueError(f"summary_length must be a positive integer, got {summary_length!r}")
    _check_indices(corpus)
    pool = candidates(corpus)
    if not pool:
        raise EmptyCorpusError("no candidate tweets with keywords")
    scores = frequency_scores(corpus)
    ranked = sorted(pool, key=lambda i: (-scores[i], i))[:summary_length]
    state = SummaryState(target=summary_length)
    for i in ranked:
        d = diversity(corpus.tweets[i], state.keyword_union).diversity
        state.add(i, corpus, 0.0, d, scores[i])
    return state
