"""Karci entropy of each tweet and keyword diversity against a partial summary."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from endsum.corpus import Corpus, ProcessedTweet
from endsum.simgraph import OverlapTable, ProbabilityRow, probability_row

if TYPE_CHECKING:
    from endsum.summarizer import SummaryState


class UndefinedSimilarityError(ValueError):
    """A tweet with no keywords has no defined similarity to a summary."""


@dataclass(frozen=True)
class EntropyScores:
    values: np.ndarray
    gamma: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])


@dataclass(frozen=True)
class DiversityScore:
    sim: float
    diversity: float


def _check_gamma(gamma: float) -> None:
    if not gamma > 0 or not math.isfinite(gamma):
        raise ValueError(f"gamma must be a positive finite number, got {gamma!r}")


def karci_entropy(row: ProbabilityRow | Sequence[float], gamma: float = 0.5) -> float:
    """Sum of ``|-p**gamma * log2(p)|`` over the row; 0 for an empty row.

    The terms are added with ``math.fsum``, so the result does not depend on
    neighbour order and equal rows always give bitwise-equal entropies.
    """
    _check_gamma(gamma)
    p = np.asarray(row.probs if isinstance(row, ProbabilityRow) else row, dtype=np.float64)
    if p.size == 0:
        return 0.0
    if np.any(p <= 0) or np.any(p > 1):
        raise ValueError("probabilities must lie in (0, 1]")
    terms = np.abs(-np.power(p, gamma) * np.log2(p))
    return math.fsum(terms.tolist())


def entropy_scores(table: OverlapTable, gamma: float = 0.5) -> EntropyScores:
    _check_gamma(gamma)
    values = np.array([karci_entropy(probability_row(table, i), gamma) for i in range(table.m)])
    return EntropyScores(values.astype(np.float64, copy=False).reshape(table.m), gamma)


def summary_keyword_union(summary: "SummaryState | Iterable[int]", corpus: Corpus) -> frozenset[str]:
    selected = getattr(summary, "selected", summary)
    union: set[str] = set()
    for i in selected:
        union |= corpus.tweets[i].keywords
    return frozenset(union)


def diversity(tweet: ProcessedTweet, summary_keywords: Iterable[str]) -> DiversityScore:
    """Fraction of the tweet's keywords absent from the summary union."""
    n = len(tweet.keywords)
    if n == 0:
        raise UndefinedSimilarityError(f"tweet {tweet.id!r} has no keywords")
    shared = len(tweet.keywords & frozenset(summary_keywords))
    sim = shared / n
    return DiversityScore(sim, 1.0 - sim)


def dump_scores_csv(corpus: Corpus, scores: EntropyScores, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["index", "id", "entropy"])
        for tweet in corpus.tweets:
            writer.writerow([tweet.index, tweet.id, repr(scores[tweet.index])])
