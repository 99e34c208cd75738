from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest

from doccluster import (
    Corpus,
    LabelRule,
    StopList,
    Vocabulary,
    WeightedMatrix,
    build_matrix,
    build_vocabulary,
    load_corpus,
)

# Four tiny documents over two domains; every weight below is reproducible
# by hand from token counts, df, and the corpus size D=4.
HAND_TEXTS = {
    "b1": "ball game. team ball.",
    "b2": "ball team win",
    "m1": "music show. music band.",
    "m2": "music song",
}
HAND_RULE = LabelRule({"b": "ballgames", "m": "melodies"})


@dataclass(frozen=True)
class HandSetup:
    root: Path
    corpus: Corpus
    stop: StopList
    vocab: Vocabulary
    tfidf: WeightedMatrix
    freq: WeightedMatrix


@pytest.fixture(scope="session")
def hand_setup(tmp_path_factory) -> HandSetup:
    root = tmp_path_factory.mktemp("hand_corpus")
    for doc_id, text in HAND_TEXTS.items():
        (root / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    corpus = load_corpus(root, HAND_RULE)
    stop = StopList.empty()
    vocab = build_vocabulary(corpus, stop)
    return HandSetup(
        root=root,
        corpus=corpus,
        stop=stop,
        vocab=vocab,
        tfidf=build_matrix(corpus, vocab, "tfidf", stop),
        freq=build_matrix(corpus, vocab, "frequency", stop),
    )


def make_matrix(weights, scheme: str = "tfidf") -> WeightedMatrix:
    """Wrap a raw (n, d) array as a matrix with synthetic term/doc names."""
    weights = np.asarray(weights, dtype=np.float64)
    n, d = weights.shape
    vocab = Vocabulary.from_terms(tuple(f"t{i}" for i in range(d)))
    ids = tuple(f"d{i:03d}" for i in range(n))
    return WeightedMatrix(vocab=vocab, doc_ids=ids, weights=weights, scheme=scheme)


@pytest.fixture
def matrix_factory():
    return make_matrix
