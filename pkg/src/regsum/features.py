"""Per-sentence features, the design matrix, polynomial expansion.

Nine features per sentence:

  position        1 - (i-1)/(M-1) for the i-th of M sentences (1.0 when M=1)
  length          token count
  avg_tf          mean document-relative term frequency of the tokens
  avg_idf         mean ln(total docs / document frequency) of the tokens
  avg_cf          mean within-cluster document-frequency fraction
  pos_ratio       nouns+verbs+adverbs+adjectives / length
  ner_ratio       capitalized non-initial non-stopword tokens / length
  number_ratio    all-digit tokens (interior commas/periods allowed) / length
  stopword_ratio  stopword tokens / length

The per-token statistics behind avg_tf/avg_idf/avg_cf are frozen in a
CorpusStats built from the training documents, so featurizing held-out
documents never leaks their contents into the statistics.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field, replace
from itertools import combinations_with_replacement
from typing import NamedTuple

import numpy as np

from . import lexicon
from .corpus import Corpus, Document, Sentence
from .errors import DataError
from .rouge import score_summary
from .stopwords import STOPWORDS

FEATURE_NAMES: tuple[str, ...] = (
    "position",
    "length",
    "avg_tf",
    "avg_idf",
    "avg_cf",
    "pos_ratio",
    "ner_ratio",
    "number_ratio",
    "stopword_ratio",
)

_NUMBER_RE = re.compile(r"\d(?:[\d.,]*\d)?")

_STD_FLOOR = 1e-12


@dataclass(frozen=True)
class TaggerConfig:
    """Lexicon + ordered suffix rules + stopword set for the rule tagger."""

    pos_lexicon: dict[str, str]
    suffix_rules: tuple[tuple[str, str], ...]
    stopwords: frozenset[str]

    def tag(self, token: str) -> str:
        if _NUMBER_RE.fullmatch(token):
            return lexicon.NUM
        known = self.pos_lexicon.get(token)
        if known is not None:
            return known
        for suffix, tag in self.suffix_rules:
            if len(token) > len(suffix) and token.endswith(suffix):
                return tag
        return lexicon.NOUN


_DEFAULT_TAGGER: TaggerConfig | None = None


def default_tagger() -> TaggerConfig:
    global _DEFAULT_TAGGER
    if _DEFAULT_TAGGER is None:
        _DEFAULT_TAGGER = TaggerConfig(
            pos_lexicon=lexicon.build_lexicon(),
            suffix_rules=lexicon.SUFFIX_RULES,
            stopwords=STOPWORDS,
        )
    return _DEFAULT_TAGGER


@dataclass(frozen=True)
class FeatureConfig:
    """Knobs for feature extraction and target computation.

    double_normalize reproduces the literal "mean ... divided by the
    sentence length" reading for avg_tf/avg_idf/avg_cf (the mean divided by
    the length a second time); off by default.
    """

    double_normalize: bool = False
    rouge_order: int = 2
    rouge_component: str = "recall"


@dataclass(frozen=True)
class FeatureVector:
    position: float
    length: float
    avg_tf: float
    avg_idf: float
    avg_cf: float
    pos_ratio: float
    ner_ratio: float
    number_ratio: float
    stopword_ratio: float

    def as_array(self) -> np.ndarray:
        return np.array(
            [getattr(self, name) for name in FEATURE_NAMES], dtype=np.float64
        )


class RowProvenance(NamedTuple):
    cluster_id: str
    doc_id: str
    sentence_index: int


@dataclass(frozen=True)
class Standardization:
    """Per-column mean/std fitted on training rows.

    Columns whose std falls below 1e-12 pass through untouched (their
    stored mean is 0 and std is 1).
    """

    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def fit(cls, rows: np.ndarray) -> "Standardization":
        mean = rows.mean(axis=0)
        std = rows.std(axis=0)
        degenerate = std < _STD_FLOOR
        mean = np.where(degenerate, 0.0, mean)
        std = np.where(degenerate, 1.0, std)
        return cls(mean=mean, std=std)

    def transform(self, rows: np.ndarray) -> np.ndarray:
        if rows.shape[1] != self.mean.shape[0]:
            raise ValueError(
                f"standardization fitted on {self.mean.shape[0]} columns, "
                f"got {rows.shape[1]}"
            )
        return (rows - self.mean) / self.std

    def to_dict(self) -> dict:
        return {"mean": self.mean.tolist(), "std": self.std.tolist()}

    @classmethod
    def from_dict(cls, payload: dict) -> "Standardization":
        return cls(
            mean=np.asarray(payload["mean"], dtype=np.float64),
            std=np.asarray(payload["std"], dtype=np.float64),
        )


@dataclass(frozen=True)
class DesignMatrix:
    rows: np.ndarray
    targets: np.ndarray
    provenance: tuple[RowProvenance, ...]
    poly_order: int = 1
    standardization: Standardization | None = None
    column_names: tuple[str, ...] = FEATURE_NAMES

    def __post_init__(self):
        n = self.rows.shape[0]
        if self.targets.shape[0] != n or len(self.provenance) != n:
            raise ValueError("rows, targets, and provenance lengths differ")
        if self.rows.shape[1] != len(self.column_names):
            raise ValueError("column_names length does not match row width")
        if not np.all(np.isfinite(self.rows)):
            raise ValueError("design matrix contains non-finite feature values")
        if not np.all(np.isfinite(self.targets)):
            raise ValueError("design matrix contains non-finite targets")

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def width(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True)
class CorpusStats:
    """Frozen token statistics of a document collection."""

    n_documents: int
    document_frequency: dict[str, int]
    cluster_sizes: dict[str, int]
    cluster_document_frequency: dict[str, dict[str, int]]
    document_ids: frozenset[str]

    @classmethod
    def from_documents(
        cls, pairs: Iterable[tuple[str, Document]]
    ) -> "CorpusStats":
        df: dict[str, int] = {}
        cluster_sizes: dict[str, int] = {}
        cluster_df: dict[str, dict[str, int]] = {}
        doc_ids: list[str] = []
        n_documents = 0
        for cluster_id, doc in pairs:
            n_documents += 1
            doc_ids.append(doc.id)
            cluster_sizes[cluster_id] = cluster_sizes.get(cluster_id, 0) + 1
            per_cluster = cluster_df.setdefault(cluster_id, {})
            seen: set[str] = set()
            for sentence in doc.sentences:
                seen.update(sentence.tokens)
            for token in sorted(seen):
                df[token] = df.get(token, 0) + 1
                per_cluster[token] = per_cluster.get(token, 0) + 1
        return cls(
            n_documents=n_documents,
            document_frequency=df,
            cluster_sizes=cluster_sizes,
            cluster_document_frequency=cluster_df,
            document_ids=frozenset(doc_ids),
        )

    @classmethod
    def from_corpus(cls, corpus: Corpus) -> "CorpusStats":
        return cls.from_documents(corpus.documents())

    def idf(self, token: str) -> float:
        df = self.document_frequency.get(token, 0)
        if df == 0 or self.n_documents == 0:
            return 0.0
        return math.log(self.n_documents / df)

    def cluster_frequency(
        self, token: str, cluster_id: str | None, doc_tokens: set[str]
    ) -> float:
        """Fraction of the cluster's documents containing the token.

        For clusters outside the statistics (or no cluster at all) the
        document stands in as its own singleton cluster.
        """
        if cluster_id is not None and cluster_id in self.cluster_sizes:
            per_cluster = self.cluster_document_frequency[cluster_id]
            return per_cluster.get(token, 0) / self.cluster_sizes[cluster_id]
        return 1.0 if token in doc_tokens else 0.0


def position_feature(i: int, m: int) -> float:
    """Lead bias: 1 for the first sentence, 0 for the last; 1.0 when M=1."""
    if not 1 <= i <= m:
        raise ValueError(f"sentence index {i} out of range for document of {m}")
    if m == 1:
        return 1.0
    return 1.0 - (i - 1) / (m - 1)


def averaged_statistic(
    sentence: Sentence, per_word_stat: Callable[[str], float]
) -> float:
    """Mean of a nonnegative per-token statistic; 0 for an empty sentence."""
    if not sentence.tokens:
        return 0.0
    return sum(per_word_stat(tok) for tok in sentence.tokens) / len(sentence.tokens)


def _is_number_token(token: str) -> bool:
    return _NUMBER_RE.fullmatch(token) is not None


def ratio_features(
    sentence: Sentence, config: TaggerConfig
) -> tuple[float, float, float, float]:
    """(pos_ratio, ner_ratio, number_ratio, stopword_ratio) of a sentence."""
    length = len(sentence.tokens)
    if length == 0:
        return (0.0, 0.0, 0.0, 0.0)
    pos_hits = sum(
        1 for tok in sentence.tokens if config.tag(tok) in lexicon.CONTENT_TAGS
    )
    ner_hits = 0
    for idx, cased in enumerate(sentence.cased_tokens):
        if idx == 0:
            continue  # sentence-initial capitalization is not evidence
        if cased[:1].isupper() and cased.lower() not in config.stopwords:
            ner_hits += 1
    number_hits = sum(1 for tok in sentence.tokens if _is_number_token(tok))
    stop_hits = sum(1 for tok in sentence.tokens if tok in config.stopwords)
    return (
        pos_hits / length,
        ner_hits / length,
        number_hits / length,
        stop_hits / length,
    )


def sentence_feature_vector(
    sentence: Sentence,
    document: Document,
    cluster_id: str | None,
    stats: CorpusStats,
    tagger: TaggerConfig,
    config: FeatureConfig = FeatureConfig(),
    _doc_cache: tuple[Counter, int, set[str]] | None = None,
) -> FeatureVector:
    """Feature vector for one sentence in its document/cluster context."""
    if _doc_cache is None:
        _doc_cache = _document_token_cache(document)
    doc_counts, doc_total, doc_tokens = _doc_cache

    def tf(token: str) -> float:
        return doc_counts[token] / doc_total if doc_total else 0.0

    def cf(token: str) -> float:
        return stats.cluster_frequency(token, cluster_id, doc_tokens)

    avg_tf = averaged_statistic(sentence, tf)
    avg_idf = averaged_statistic(sentence, stats.idf)
    avg_cf = averaged_statistic(sentence, cf)
    length = len(sentence.tokens)
    if config.double_normalize and length:
        avg_tf /= length
        avg_idf /= length
        avg_cf /= length
    pos_ratio, ner_ratio, number_ratio, stopword_ratio = ratio_features(
        sentence, tagger
    )
    return FeatureVector(
        position=position_feature(sentence.index, len(document.sentences)),
        length=float(length),
        avg_tf=avg_tf,
        avg_idf=avg_idf,
        avg_cf=avg_cf,
        pos_ratio=pos_ratio,
        ner_ratio=ner_ratio,
        number_ratio=number_ratio,
        stopword_ratio=stopword_ratio,
    )


def _document_token_cache(document: Document) -> tuple[Counter, int, set[str]]:
    counts: Counter = Counter()
    for sentence in document.sentences:
        counts.update(sentence.tokens)
    total = sum(counts.values())
    return counts, total, set(counts)


def document_feature_rows(
    document: Document,
    cluster_id: str | None,
    stats: CorpusStats,
    tagger: TaggerConfig | None = None,
    config: FeatureConfig = FeatureConfig(),
) -> np.ndarray:
    """Feature rows (one per sentence) for a document; shape (M, 9)."""
    tagger = tagger or default_tagger()
    cache = _document_token_cache(document)
    rows = [
        sentence_feature_vector(
            sentence, document, cluster_id, stats, tagger, config, cache
        ).as_array()
        for sentence in document.sentences
    ]
    return np.vstack(rows) if rows else np.empty((0, len(FEATURE_NAMES)))


def corpus_feature_rows(
    corpus: Corpus,
    stats: CorpusStats | None = None,
    tagger: TaggerConfig | None = None,
    config: FeatureConfig = FeatureConfig(),
) -> np.ndarray:
    """Stacked feature rows for every sentence of the corpus, no targets."""
    stats = stats or CorpusStats.from_corpus(corpus)
    blocks = [
        document_feature_rows(doc, cluster_id, stats, tagger, config)
        for cluster_id, doc in corpus.documents()
    ]
    if not blocks:
        return np.empty((0, len(FEATURE_NAMES)))
    return np.vstack(blocks)


def build_design_matrix(
    corpus: Corpus,
    rouge_order: int | None = None,
    stats: CorpusStats | None = None,
    tagger: TaggerConfig | None = None,
    config: FeatureConfig = FeatureConfig(),
) -> DesignMatrix:
    """One row per sentence over the whole corpus, ROUGE targets attached.

    ``stats`` defaults to statistics of ``corpus`` itself; pass the training
    statistics instead when featurizing held-out documents.
    """
    stats = stats or CorpusStats.from_corpus(corpus)
    tagger = tagger or default_tagger()
    order = rouge_order if rouge_order is not None else config.rouge_order
    rows: list[np.ndarray] = []
    targets: list[float] = []
    provenance: list[RowProvenance] = []
    for cluster_id, doc in corpus.documents():
        if doc.gold_summary is None:
            raise DataError(f"document {doc.id!r} has no gold summary")
        rows.append(document_feature_rows(doc, cluster_id, stats, tagger, config))
        for sentence in doc.sentences:
            score = score_summary([sentence], doc.gold_summary, n=order)
            targets.append(score.component(config.rouge_component))
            provenance.append(RowProvenance(cluster_id, doc.id, sentence.index))
    stacked = (
        np.vstack(rows) if rows else np.empty((0, len(FEATURE_NAMES)))
    )
    return DesignMatrix(
        rows=stacked,
        targets=np.asarray(targets, dtype=np.float64),
        provenance=tuple(provenance),
    )


def _monomial_indices(width: int, order: int) -> list[tuple[int, ...]]:
    indices: list[tuple[int, ...]] = []
    for degree in range(1, order + 1):
        indices.extend(combinations_with_replacement(range(width), degree))
    return indices


def expanded_width(base_width: int, order: int) -> int:
    return len(_monomial_indices(base_width, order))


def expand_rows(rows: np.ndarray, order: int) -> np.ndarray:
    """All monomials of total degree <= order, no constant column.

    Column order: degree-1 columns in base order, then degree-2 index
    combinations lexicographically, then degree-3.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"polynomial order must be 1, 2, or 3, got {order}")
    if order == 1:
        return np.array(rows, dtype=np.float64, copy=True)
    columns = [
        np.prod(rows[:, combo], axis=1)
        for combo in _monomial_indices(rows.shape[1], order)
    ]
    return np.column_stack(columns)


def polynomial_expand(matrix: DesignMatrix, order: int) -> DesignMatrix:
    """Expand an unexpanded design matrix to the given polynomial order."""
    if matrix.poly_order != 1:
        raise ValueError("matrix is already polynomial-expanded")
    expanded = expand_rows(matrix.rows, order)
    names = tuple(
        "*".join(matrix.column_names[i] for i in combo)
        for combo in _monomial_indices(matrix.width, order)
    )
    return DesignMatrix(
        rows=expanded,
        targets=matrix.targets,
        provenance=matrix.provenance,
        poly_order=order,
        standardization=None,
        column_names=names,
    )


def standardize(matrix: DesignMatrix) -> DesignMatrix:
    """Fit per-column standardization on this matrix and apply it."""
    if matrix.standardization is not None:
        raise ValueError("matrix is already standardized")
    stz = Standardization.fit(matrix.rows)
    return replace(matrix, rows=stz.transform(matrix.rows), standardization=stz)


def apply_standardization(matrix: DesignMatrix, stz: Standardization) -> DesignMatrix:
    """Apply training-set standardization statistics to another matrix."""
    if matrix.standardization is not None:
        raise ValueError("matrix is already standardized")
    return replace(matrix, rows=stz.transform(matrix.rows), standardization=stz)


def matrix_to_csv(matrix: DesignMatrix) -> str:
    """CSV export of an unexpanded matrix; floats use 9 significant digits."""
    if matrix.poly_order != 1:
        raise ValueError("CSV export is defined for unexpanded matrices")
    lines = ["cluster,doc,sentence," + ",".join(FEATURE_NAMES) + ",target"]
    for row, target, prov in zip(matrix.rows, matrix.targets, matrix.provenance):
        values = ",".join(f"{v:.9g}" for v in row)
        lines.append(
            f"{prov.cluster_id},{prov.doc_id},{prov.sentence_index},"
            f"{values},{target:.9g}"
        )
    return "\n".join(lines) + "\n"
