"""ROUGE-1, ROUGE-2 and ROUGE-L (whole-sequence LCS) with F1."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from endsum.corpus import NormalizerConfig, normalize_tokens


class EvaluationError(ValueError):
    """One side of the comparison is empty after normalization."""


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float

    @classmethod
    def from_pr(cls, precision: float, recall: float) -> "RougeScore":
        if precision + recall > 0:
            return cls(precision, recall, 2 * precision * recall / (precision + recall))
        return cls(precision, recall, 0.0)


@dataclass(frozen=True)
class RougeReport:
    rouge1: RougeScore
    rouge2: RougeScore
    rougeL: RougeScore
    candidate_tokens: int
    reference_tokens: int

    def to_json(self) -> str:
        """Fixed six-decimal JSON, e.g. ``{"rouge1": {"p": 1.000000, ...}, ...}``."""
        parts = []
        for name in ("rouge1", "rouge2", "rougeL"):
            s = getattr(self, name)
            parts.append(f'"{name}": {{"p": {s.precision:.6f}, "r": {s.recall:.6f}, "f1": {s.f1:.6f}}}')
        return "{" + ", ".join(parts) + "}"


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    cand, ref = _ngrams(candidate, n), _ngrams(reference, n)
    n_cand, n_ref = sum(cand.values()), sum(ref.values())
    matched = sum((cand & ref).values())
    precision = matched / n_cand if n_cand else 0.0
    recall = matched / n_ref if n_ref else 0.0
    return RougeScore.from_pr(precision, recall)


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, 1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> RougeScore:
    if not candidate or not reference:
        return RougeScore(0.0, 0.0, 0.0)
    lcs = lcs_length(candidate, reference)
    return RougeScore.from_pr(lcs / len(candidate), lcs / len(reference))


def evaluate(candidate_summary: str, reference_summary: str, normalize: NormalizerConfig) -> RougeReport:
    """Score a candidate summary text against a reference text.

    Both sides go through the corpus token pipeline (lowercase, URL/mention/'#'
    stripping, lemma lookup, token filtering) but not keyword filtering, and
    are compared as single flattened sequences.
    """
    cand = normalize_tokens(candidate_summary, normalize)
    ref = normalize_tokens(reference_summary, normalize)
    if not cand:
        raise EvaluationError("candidate summary is empty after normalization")
    if not ref:
        raise EvaluationError("reference summary is empty after normalization")
    return RougeReport(
        rouge1=rouge_n(cand, ref, 1),
        rouge2=rouge_n(cand, ref, 2),
        rougeL=rouge_l(cand, ref),
        candidate_tokens=len(cand),
        reference_tokens=len(ref),
    )
