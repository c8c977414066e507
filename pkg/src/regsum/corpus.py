"""Corpus model: clusters of documents, sentence segmentation, tokenization.

The corpus file format is JSON:

    {"clusters": [{"id": str,
                   "documents": [{"id": str, "text": str, "summary": str|null}]}]}

Everything is immutable after loading; loading the same bytes twice yields
structurally equal corpora.
"""

from __future__ import annotations

import json
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataError

# Periods after these words never end a sentence. Versioned here on purpose:
# editing the list changes segmentation for every corpus.
ABBREVIATIONS: frozenset[str] = frozenset(
    {
        "mr", "mrs", "ms", "dr", "prof", "st", "jr", "sr", "rev", "gen",
        "sen", "rep", "gov", "col", "capt", "lt", "sgt", "maj", "pres",
        "dept", "univ", "assn", "bros", "inc", "ltd", "co", "corp", "vs",
        "etc", "e.g", "i.e", "u.s", "u.k", "u.n", "a.m", "p.m", "jan",
        "feb", "aug", "sep", "sept", "oct", "nov", "dec",
    }
)

_TERMINATORS = ".!?"


@dataclass(frozen=True)
class Sentence:
    """One sentence: 1-based index, raw text, lowercased tokens.

    ``cased_tokens`` keeps the pre-lowercasing forms for the capitalization
    heuristics downstream; it is always parallel to ``tokens``.
    """

    index: int
    raw: str
    tokens: tuple[str, ...]
    cased_tokens: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]
    gold_summary: tuple[Sentence, ...] | None = None


@dataclass(frozen=True)
class Cluster:
    id: str
    documents: tuple[Document, ...]


@dataclass(frozen=True)
class Corpus:
    clusters: tuple[Cluster, ...]
    # token -> number of documents containing it
    vocabulary: dict[str, int] = field(default_factory=dict)

    def documents(self) -> Iterator[tuple[str, Document]]:
        """Yield (cluster_id, document) pairs in corpus order."""
        for cluster in self.clusters:
            for doc in cluster.documents:
                yield cluster.id, doc

    def document_count(self) -> int:
        return sum(len(c.documents) for c in self.clusters)

    def sentence_count(self) -> int:
        return sum(len(d.sentences) for _, d in self.documents())

    def find_document(self, doc_id: str) -> tuple[str, Document]:
        for cluster_id, doc in self.documents():
            if doc.id == doc_id:
                return cluster_id, doc
        raise DataError(f"document {doc_id!r} not found in corpus")


def _guard_word(text: str, start: int, period: int) -> tuple[str, bool]:
    """Word immediately before ``period`` and whether it opens the fragment."""
    j = period
    while j > start and not text[j - 1].isspace():
        j -= 1
    word = text[j:period].strip("\"'()[]{}<>,;:")
    opens_fragment = text[start:j].strip() == ""
    return word, opens_fragment


def _is_abbreviation(text: str, start: int, period: int) -> bool:
    word, opens_fragment = _guard_word(text, start, period)
    if not word:
        return False
    # Single capital letters are initials ("George W. Bush") unless they
    # open the fragment, where "A. B." style labels are two sentences.
    if len(word) == 1 and word.isalpha() and word.isupper():
        return not opens_fragment
    return word.lower() in ABBREVIATIONS


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences.

    A '.', '!' or '?' ends a sentence when followed by whitespace or the end
    of the text, except that a period after an abbreviation or a mid-fragment
    single capital letter (an initial) does not split. Text without any
    terminator comes back as a single sentence.
    """
    sentences: list[str] = []
    start = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        if i + 1 < n and not text[i + 1].isspace():
            continue
        if ch == "." and _is_abbreviation(text, start, i):
            continue
        fragment = text[start : i + 1].strip()
        if fragment:
            sentences.append(fragment)
        start = i + 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _strip_edges(token: str) -> str:
    # Apostrophes survive at the edges ("firms'"); everything else
    # non-alphanumeric is trimmed. Interior characters are never touched.
    start, end = 0, len(token)
    while start < end and not (token[start].isalnum() or token[start] == "'"):
        start += 1
    while end > start and not (token[end - 1].isalnum() or token[end - 1] == "'"):
        end -= 1
    return token[start:end]


def tokenize_cased(sentence: str) -> list[str]:
    """Like :func:`tokenize` but without lowercasing."""
    out = []
    for piece in sentence.split():
        stripped = _strip_edges(piece)
        if stripped:
            out.append(stripped)
    return out


def tokenize(sentence: str) -> list[str]:
    """Whitespace-split, strip edge punctuation, lowercase, drop empties."""
    return [tok.lower() for tok in tokenize_cased(sentence)]


def make_sentences(text: str) -> tuple[Sentence, ...]:
    """Segment and tokenize text into indexed Sentence objects."""
    out = []
    for idx, raw in enumerate(segment_sentences(text), start=1):
        cased = tuple(tokenize_cased(raw))
        tokens = tuple(tok.lower() for tok in cased)
        out.append(Sentence(index=idx, raw=raw, tokens=tokens, cased_tokens=cased))
    return tuple(out)


def _document_from_dict(payload: dict, cluster_id: str) -> Document:
    if not isinstance(payload, dict):
        raise DataError(f"cluster {cluster_id!r}: document entry is not an object")
    doc_id = payload.get("id")
    if not isinstance(doc_id, str) or not doc_id:
        raise DataError(f"cluster {cluster_id!r}: document missing string id")
    text = payload.get("text")
    if not isinstance(text, str) or not text.strip():
        raise DataError(f"document {doc_id!r} has empty text")
    sentences = make_sentences(text)
    if not sentences:
        raise DataError(f"document {doc_id!r} has empty text")
    summary = payload.get("summary")
    gold = None
    if summary is not None:
        if not isinstance(summary, str):
            raise DataError(f"document {doc_id!r}: summary must be a string or null")
        gold = make_sentences(summary)
        if not gold:
            raise DataError(f"document {doc_id!r}: summary text is empty")
    return Document(id=doc_id, sentences=sentences, gold_summary=gold)


def corpus_from_dict(payload: dict) -> Corpus:
    """Build and validate a Corpus from parsed JSON."""
    if not isinstance(payload, dict) or not isinstance(payload.get("clusters"), list):
        raise DataError("corpus JSON must be an object with a 'clusters' list")
    clusters = []
    seen_cluster_ids: set[str] = set()
    for entry in payload["clusters"]:
        if not isinstance(entry, dict):
            raise DataError("cluster entry is not an object")
        cluster_id = entry.get("id")
        if not isinstance(cluster_id, str) or not cluster_id:
            raise DataError("cluster missing string id")
        if cluster_id in seen_cluster_ids:
            raise DataError(f"duplicate cluster id {cluster_id!r}")
        seen_cluster_ids.add(cluster_id)
        docs_payload = entry.get("documents")
        if not isinstance(docs_payload, list) or not docs_payload:
            raise DataError(f"cluster {cluster_id!r} has no documents")
        documents = []
        seen_doc_ids: set[str] = set()
        for doc_payload in docs_payload:
            doc = _document_from_dict(doc_payload, cluster_id)
            if doc.id in seen_doc_ids:
                raise DataError(
                    f"cluster {cluster_id!r}: duplicate document id {doc.id!r}"
                )
            seen_doc_ids.add(doc.id)
            documents.append(doc)
        clusters.append(Cluster(id=cluster_id, documents=tuple(documents)))
    corpus = Corpus(clusters=tuple(clusters))
    return Corpus(clusters=corpus.clusters, vocabulary=_vocabulary(corpus))


def _vocabulary(corpus: Corpus) -> dict[str, int]:
    counts: dict[str, int] = {}
    for _, doc in corpus.documents():
        seen: set[str] = set()
        for sentence in doc.sentences:
            seen.update(sentence.tokens)
        for token in sorted(seen):
            counts[token] = counts.get(token, 0) + 1
    return counts


def load_corpus(path: str | Path) -> Corpus:
    """Load a corpus JSON file from disk."""
    p = Path(path)
    if not p.exists():
        raise DataError(f"corpus file not found: {p}")
    try:
        payload = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataError(f"malformed corpus JSON in {p}: {exc}") from exc
    return corpus_from_dict(payload)


def subset_corpus(corpus: Corpus, doc_ids: set[str]) -> Corpus:
    """Corpus restricted to the given document ids.

    Clusters left with no documents are dropped; the vocabulary is
    recomputed so statistics never see the removed documents.
    """
    clusters = []
    for cluster in corpus.clusters:
        kept = tuple(d for d in cluster.documents if d.id in doc_ids)
        if kept:
            clusters.append(Cluster(id=cluster.id, documents=kept))
    trimmed = Corpus(clusters=tuple(clusters))
    return Corpus(clusters=trimmed.clusters, vocabulary=_vocabulary(trimmed))
