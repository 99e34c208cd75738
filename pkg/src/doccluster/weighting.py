"""Term weighting and the document-term matrix.

Two schemes:

* ``frequency``: occurrence count divided by the document's total token
  count (after stop-word removal).
* ``tfidf``: sqrt(count) * ln(D/df), unnormalized.  ``df`` counts the
  documents containing the term at least once, ``D`` is the corpus size.

The log base is fixed to the natural logarithm; any other base would only
rescale every idf by one constant.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .corpus import Corpus
from .errors import DomainError, EmptyDocumentWarning, EmptyVocabulary, UnknownDocument
from .preprocess import StopList, remove_stopwords, tokenize

SCHEMES = ("frequency", "tfidf")


@dataclass(frozen=True)
class Vocabulary:
    """Ordered term axis of the matrix: descending df, ties lexicographic."""

    terms: tuple[str, ...]
    doc_freq: tuple[int, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.terms) != len(self.doc_freq):
            raise DomainError("terms and doc_freq must have equal length")
        index = {t: i for i, t in enumerate(self.terms)}
        if len(index) != len(self.terms):
            raise DomainError("vocabulary terms must be unique")
        object.__setattr__(self, "index", index)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    @classmethod
    def from_terms(cls, terms: Sequence[str], doc_freq: Sequence[int] | None = None) -> "Vocabulary":
        """Build directly from a term list (df defaults to 1 per term)."""
        terms = tuple(terms)
        if doc_freq is None:
            doc_freq = (1,) * len(terms)
        return cls(terms=terms, doc_freq=tuple(doc_freq))


def doc_tokens(doc_text: str, stop: StopList) -> list[str]:
    """The post-stop-word token stream of one document."""
    return remove_stopwords(tokenize(doc_text), stop)


def build_vocabulary(corpus: Corpus, stop: StopList, max_terms: int | None = None) -> Vocabulary:
    """Union of all post-stop-word tokens, optionally pruned to the
    ``max_terms`` terms with the highest document frequency."""
    if max_terms is not None and max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    df: Counter[str] = Counter()
    for doc in corpus:
        df.update(set(doc_tokens(doc.text, stop)))
    if not df:
        raise EmptyVocabulary("no terms remain after stop-word removal")
    ordered = sorted(df, key=lambda t: (-df[t], t))
    if max_terms is not None:
        ordered = ordered[:max_terms]
    return Vocabulary(terms=tuple(ordered), doc_freq=tuple(df[t] for t in ordered))


def frequency_weight(doc_tokens: Sequence[str], vocab: Vocabulary) -> np.ndarray:
    """Per-term occurrence ratio over the document's total token count.

    A document with no tokens yields an all-zero row and an
    EmptyDocumentWarning.
    """
    counts = np.zeros(len(vocab), dtype=np.float64)
    for token in doc_tokens:
        i = vocab.index.get(token)
        if i is not None:
            counts[i] += 1.0
    total = len(doc_tokens)
    if total == 0:
        warnings.warn("document has no tokens; weight row is all zeros",
                      EmptyDocumentWarning, stacklevel=2)
        return counts
    return counts / total


def term_frequency(count: int) -> float:
    """sqrt of the occurrence count."""
    if count < 0:
        raise DomainError(f"count must be >= 0, got {count}")
    return math.sqrt(count)


def inverse_document_frequency(df: int, D: int) -> float:
    """ln(D/df) for 1 <= df <= D."""
    if D < 1:
        raise DomainError(f"corpus size must be >= 1, got {D}")
    if df < 1 or df > D:
        raise DomainError(f"document frequency must be in [1, {D}], got {df}")
    return math.log(D / df)


def tfidf_weight(count: int, df: int, D: int) -> float:
    """sqrt(count) * ln(D/df), unnormalized."""
    return term_frequency(count) * inverse_document_frequency(df, D)


@dataclass(frozen=True, eq=False)
class WeightedMatrix:
    """Dense doc-by-term weight table; row order follows the corpus."""

    vocab: Vocabulary
    doc_ids: tuple[str, ...]
    weights: np.ndarray  # shape (len(doc_ids), len(vocab))
    scheme: str

    def __post_init__(self):
        if self.weights.shape != (len(self.doc_ids), len(self.vocab)):
            raise DomainError(
                f"weights shape {self.weights.shape} does not match "
                f"{len(self.doc_ids)} docs x {len(self.vocab)} terms"
            )

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    def row(self, doc_id: str) -> np.ndarray:
        try:
            i = self.doc_ids.index(doc_id)
        except ValueError:
            raise UnknownDocument(f"no matrix row for document {doc_id!r}") from None
        return self.weights[i]


def build_matrix(corpus: Corpus, vocab: Vocabulary, scheme: str, stop: StopList) -> WeightedMatrix:
    """One weight row per document, in corpus order.

    ``vocab`` must come from the same corpus and stop list so that the
    stored document frequencies are valid.
    """
    if scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    n, v = len(corpus), len(vocab)
    weights = np.zeros((n, v), dtype=np.float64)
    if scheme == "frequency":
        for i, doc in enumerate(corpus):
            weights[i] = frequency_weight(doc_tokens(doc.text, stop), vocab)
    else:
        counts = np.zeros((n, v), dtype=np.float64)
        for i, doc in enumerate(corpus):
            for token in doc_tokens(doc.text, stop):
                j = vocab.index.get(token)
                if j is not None:
                    counts[i, j] += 1.0
        idf = np.log(len(corpus) / np.asarray(vocab.doc_freq, dtype=np.float64))
        weights = np.sqrt(counts) * idf
    return WeightedMatrix(vocab=vocab, doc_ids=corpus.ids(), weights=weights, scheme=scheme)


def write_matrix_csv(matrix: WeightedMatrix, out: str | Path | io.TextIOBase) -> int:
    """CSV export: header ``doc,term1,...``; weights in shortest
    round-trip decimal form.  Returns the number of bytes written."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["doc", *matrix.vocab.terms])
    for doc_id, row in zip(matrix.doc_ids, matrix.weights):
        writer.writerow([doc_id, *(repr(float(w)) for w in row)])
    data = buf.getvalue()
    if isinstance(out, (str, Path)):
        Path(out).write_text(data, encoding="utf-8")
    else:
        out.write(data)
    return len(data.encode("utf-8"))
