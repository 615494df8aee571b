"""Pairwise keyword overlap between tweets, backed by an inverted index.

The table is never materialized as an m x m matrix. Each row is assembled on
demand from the postings of the tweet's keywords, so the cost of a row is the
total length of those postings rather than m.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from endsum.corpus import Corpus


def keyword_overlap(a: Iterable[str], b: Iterable[str]) -> int:
    return len(set(a) & set(b))


@dataclass(frozen=True)
class ProbabilityRow:
    """Neighbour indices and their normalized overlaps ``p_ij``."""

    neighbors: np.ndarray
    probs: np.ndarray

    @property
    def entries(self) -> list[tuple[int, float]]:
        return list(zip(self.neighbors.tolist(), self.probs.tolist()))

    def __len__(self) -> int:
        return len(self.neighbors)


class OverlapTable:
    """Keyword overlaps for every ordered pair of distinct tweets.

    Built once per corpus by :func:`build_overlap_table`. Self pairs are excluded,
    so ``overlap(i, i)`` is 0 by definition.
    """

    def __init__(self, keyword_ids: list[np.ndarray], postings: list[np.ndarray]):
        self.m = len(keyword_ids)
        self._keyword_ids = keyword_ids
        self._postings = postings
        self._kwsets = [frozenset(ids.tolist()) for ids in keyword_ids]
        self._row_sums = np.zeros(self.m, dtype=np.int64)
        for i in range(self.m):
            self._row_sums[i] = self._row_total(i)

    def _row_total(self, i: int) -> int:
        # sum_j |K_i & K_j| over j != i == sum over i's keywords of (df - 1)
        ids = self._keyword_ids[i]
        return int(sum(len(self._postings[k]) - 1 for k in ids.tolist()))

    def _check(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise IndexError(f"tweet index {i} out of range for m={self.m}")

    def overlap(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        if i == j:
            return 0
        return len(self._kwsets[i] & self._kwsets[j])

    def row_sum(self, i: int) -> int:
        self._check(i)
        return int(self._row_sums[i])

    @property
    def row_sums(self) -> np.ndarray:
        return self._row_sums.copy()

    def overlap_row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Sorted neighbour indices of ``i`` and the matching positive overlap counts."""
        self._check(i)
        ids = self._keyword_ids[i]
        if self._row_sums[i] == 0:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty.copy()
        hits = np.concatenate([self._postings[k] for k in ids.tolist()])
        counts = np.bincount(hits, minlength=self.m)
        counts[i] = 0
        nbrs = np.flatnonzero(counts)
        return nbrs, counts[nbrs]

    def neighbors(self, i: int) -> list[int]:
        return self.overlap_row(i)[0].tolist()

    def iter_positive(self) -> Iterable[tuple[int, int, int]]:
        """Yield ``(i, j, overlap)`` for every positive entry in (i, j) order."""
        for i in range(self.m):
            nbrs, counts = self.overlap_row(i)
            yield from zip([i] * len(nbrs), nbrs.tolist(), counts.tolist())


def build_overlap_table(corpus: Corpus) -> OverlapTable:
    vocab: dict[str, int] = {}
    keyword_ids = []
    postings_lists: list[list[int]] = []
    for i, tweet in enumerate(corpus.tweets):
        ids = []
        # sorted so keyword ids do not depend on set iteration order
        for kw in sorted(tweet.keywords):
            k = vocab.get(kw)
            if k is None:
                k = vocab[kw] = len(postings_lists)
                postings_lists.append([])
            postings_lists[k].append(i)
            ids.append(k)
        keyword_ids.append(np.asarray(ids, dtype=np.int64))
    postings = [np.asarray(p, dtype=np.int64) for p in postings_lists]
    return OverlapTable(keyword_ids, postings)


def probability_row(table: OverlapTable, i: int) -> ProbabilityRow:
    """Normalize row ``i`` of the overlap table into ``p_ij = overlap(i, j) / row_sum(i)``.

    Neighbours are exactly the tweets with positive overlap, which for
    non-negative term vectors is the same set as positive cosine similarity.
    """
    nbrs, counts = table.overlap_row(i)
    total = table.row_sum(i)
    if total == 0:
        return ProbabilityRow(nbrs, np.empty(0, dtype=np.float64))
    return ProbabilityRow(nbrs, counts / total)


def dump_overlaps_csv(table: OverlapTable, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["i", "j", "overlap"])
        writer.writerows(table.iter_positive())
