"""Generated keyword corpora for property tests and timing runs."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from endsum.corpus import Corpus


def random_keyword_corpus(rng: np.random.Generator, m: int, vocab_size: int = 12, max_keywords: int = 5) -> Corpus:
    """Uniform random keyword sets, each non-empty. Small vocabularies give dense overlaps."""
    sets = []
    for _ in range(m):
        k = int(rng.integers(1, max_keywords + 1))
        words = rng.choice(vocab_size, size=min(k, vocab_size), replace=False)
        sets.append({f"w{w}" for w in words.tolist()})
    return Corpus.from_keywords(sets)


def zipf_keyword_corpus(
    m: int,
    mean_keywords: float = 8.0,
    vocab_size: int = 20_000,
    exponent: float = 1.1,
    seed: int = 0,
) -> Corpus:
    """Keyword sets drawn from a truncated Zipf law over ``vocab_size`` words.

    Set sizes are ``1 + Poisson(mean_keywords - 1)``; duplicates within one
    draw are redrawn so every tweet gets exactly that many distinct keywords.
    """
    rng = np.random.default_rng(seed)
    ranks = np.arange(1, vocab_size + 1, dtype=np.float64)
    weights = ranks ** -exponent
    weights /= weights.sum()
    sizes = 1 + rng.poisson(mean_keywords - 1, size=m)
    sizes = np.minimum(sizes, vocab_size)
    cdf = np.cumsum(weights)
    sets = []
    for n in sizes.tolist():
        chosen: set[int] = set()
        while len(chosen) < n:
            draws = np.searchsorted(cdf, rng.random(n - len(chosen)), side="right")
            chosen.update(np.minimum(draws, vocab_size - 1).tolist())
        sets.append({f"k{w}" for w in chosen})
    return Corpus.from_keywords(sets)


def write_jsonl(corpus: Corpus, path: str | Path) -> None:
    """Write a generated corpus as tweet JSONL, using the keywords as the text."""
    with open(path, "w", encoding="utf-8") as fh:
        for t in corpus.tweets:
            fh.write(json.dumps({"id": f"s{t.index}", "text": " ".join(sorted(t.keywords))}) + "\n")
