"""ROUGE-N overlap scores.

Clipped-count definition: each candidate n-gram can match a reference
n-gram at most as many times as it occurs in the reference. Recall divides
the clipped match count by the reference n-gram total, precision by the
candidate total, and F1 is their harmonic mean (0 when both are 0).

Multi-sentence texts contribute the union of their per-sentence n-gram
multisets; n-grams never span a sentence boundary, so a summary's score
does not depend on the order its sentences are emitted in.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .corpus import Sentence


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float
    n: int

    def component(self, name: str) -> float:
        if name not in ("precision", "recall", "f1"):
            raise ValueError(f"unknown ROUGE component {name!r}")
        return getattr(self, name)


def ngrams(tokens: Sequence[str], n: int) -> Counter[tuple[str, ...]]:
    """Multiset of all contiguous n-token windows."""
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _score_counts(
    candidate: Counter[tuple[str, ...]], reference: Counter[tuple[str, ...]], n: int
) -> RougeScore:
    cand_total = sum(candidate.values())
    ref_total = sum(reference.values())
    matched = sum(min(count, reference[gram]) for gram, count in candidate.items())
    precision = matched / cand_total if cand_total else 0.0
    recall = matched / ref_total if ref_total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return RougeScore(precision=precision, recall=recall, f1=f1, n=n)


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int) -> RougeScore:
    """ROUGE-N between two flat token lists."""
    return _score_counts(ngrams(candidate, n), ngrams(reference, n), n)


def _summary_counts(sentences: Sequence[Sentence], n: int) -> Counter[tuple[str, ...]]:
    counts: Counter[tuple[str, ...]] = Counter()
    for sentence in sentences:
        counts.update(ngrams(sentence.tokens, n))
    return counts


def score_summary(
    predicted: Sequence[Sentence], gold: Sequence[Sentence], n: int = 2
) -> RougeScore:
    """ROUGE-N between a predicted summary and the gold summary."""
    if not gold:
        raise ValueError("gold summary is empty")
    return _score_counts(_summary_counts(predicted, n), _summary_counts(gold, n), n)
