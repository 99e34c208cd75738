"""Extractive per-document summaries driven by matrix weights.

A sentence's weight is the sum, with multiplicity, of the owning
document's matrix weights over the sentence's tokens; tokens outside the
vocabulary contribute nothing.  The top-n sentences are emitted in their
original order, ties breaking toward the earlier sentence.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .clustering import Clustering
from .corpus import Corpus, Document
from .errors import DomainError, EmptyCluster, EmptyDocument, EmptyDocumentWarning
from .preprocess import Sentence, StopList, split_sentences
from .weighting import Vocabulary, WeightedMatrix


@dataclass(frozen=True)
class ScoredSentence:
    sentence: Sentence
    weight: float


@dataclass(frozen=True)
class Summary:
    doc_id: str
    selected: tuple[ScoredSentence, ...]
    n_requested: int


def sentence_weight(
    sentence: Sentence,
    doc_row: np.ndarray,
    vocab: Vocabulary,
    normalize: bool = False,
) -> float:
    """Sum of the row's weights over the sentence tokens.

    With ``normalize`` the sum is divided by the token count, so long
    sentences lose their length advantage.
    """
    total = 0.0
    for token in sentence.tokens:
        i = vocab.index.get(token)
        if i is not None:
            total += float(doc_row[i])
    if normalize and sentence.tokens:
        total /= len(sentence.tokens)
    return total


def summarize(
    doc: Document,
    matrix: WeightedMatrix,
    n: int,
    stop: StopList | None = None,
    normalize: bool = False,
) -> Summary:
    """Top-n sentences of one document, restored to document order."""
    if n < 1:
        raise DomainError(f"summary length must be >= 1, got {n}")
    sentences = split_sentences(doc.text, stop)
    if not sentences:
        raise EmptyDocument(f"document {doc.id!r} has no sentences")
    row = matrix.row(doc.id)
    weights = [sentence_weight(s, row, matrix.vocab, normalize) for s in sentences]
    ranked = sorted(range(len(sentences)), key=lambda i: (-weights[i], i))
    chosen = sorted(ranked[: min(n, len(sentences))])
    return Summary(
        doc_id=doc.id,
        selected=tuple(ScoredSentence(sentences[i], weights[i]) for i in chosen),
        n_requested=n,
    )


def summarize_cluster(
    cluster: int,
    clustering: Clustering,
    corpus: Corpus,
    matrix: WeightedMatrix,
    n: int,
    stop: StopList | None = None,
    normalize: bool = False,
    skip_empty: bool = False,
) -> tuple[Summary, ...]:
    """One summary per document in the cluster, in corpus order.

    ``skip_empty`` downgrades sentence-less documents from an error to a
    warning, dropping them from the output.
    """
    member_rows = [i for i, c in enumerate(clustering.assignment) if c == cluster]
    if not member_rows:
        raise EmptyCluster(f"cluster {cluster} has no documents")
    summaries = []
    for i in member_rows:
        doc = corpus.doc(matrix.doc_ids[i])
        try:
            summaries.append(summarize(doc, matrix, n, stop, normalize))
        except EmptyDocument:
            if not skip_empty:
                raise
            warnings.warn(
                f"skipping document {doc.id!r}: no sentences", EmptyDocumentWarning
            )
    return tuple(summaries)


def summary_to_dict(summary: Summary) -> dict:
    return {
        "doc_id": summary.doc_id,
        "sentences": [
            {
                "index": scored.sentence.index,
                "weight": scored.weight,
                "text": scored.sentence.text,
            }
            for scored in summary.selected
        ],
    }


def summary_to_text(summary: Summary) -> str:
    lines = [f"== {summary.doc_id} =="]
    lines.extend(scored.sentence.text for scored in summary.selected)
    return "\n".join(lines) + "\n"
