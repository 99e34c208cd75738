from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import make_matrix
from doccluster.clustering import Clustering
from doccluster.corpus import Corpus, Document
from doccluster.errors import (
    DomainError,
    EmptyCluster,
    EmptyDocument,
    EmptyDocumentWarning,
)
from doccluster.preprocess import Sentence, StopList, split_sentences
from doccluster.summarization import (
    sentence_weight,
    summarize,
    summarize_cluster,
    summary_to_dict,
    summary_to_text,
)
from doccluster.weighting import Vocabulary, WeightedMatrix


def _doc(doc_id: str, text: str) -> Document:
    return Document(id=doc_id, label=None, text=text, byte_len=len(text.encode()))


def _doc_matrix(doc_id: str, terms, row) -> WeightedMatrix:
    vocab = Vocabulary.from_terms(tuple(terms))
    weights = np.asarray([row], dtype=np.float64)
    return WeightedMatrix(vocab=vocab, doc_ids=(doc_id,), weights=weights, scheme="tfidf")


def _sentence(tokens, index=0, text=None):
    return Sentence(index=index, text=text or " ".join(tokens), tokens=tuple(tokens))


class TestSentenceWeight:
    def test_multiplicity_counts(self):
        vocab = Vocabulary.from_terms(("cat", "dog"))
        row = np.array([0.4, 1.0])
        assert sentence_weight(_sentence(["cat", "cat"]), row, vocab) == pytest.approx(0.8)

    def test_out_of_vocabulary_contributes_zero(self):
        vocab = Vocabulary.from_terms(("cat",))
        row = np.array([0.4])
        assert sentence_weight(_sentence(["unknown", "tokens"]), row, vocab) == 0.0

    def test_mixed(self):
        vocab = Vocabulary.from_terms(("a", "b"))
        row = np.array([1.5, 2.0])
        assert sentence_weight(_sentence(["a", "zzz", "b", "a"]), row, vocab) == pytest.approx(5.0)

    def test_normalization_divides_by_token_count(self):
        vocab = Vocabulary.from_terms(("a",))
        row = np.array([3.0])
        sentence = _sentence(["a", "a", "zzz"])
        assert sentence_weight(sentence, row, vocab, normalize=True) == pytest.approx(2.0)

    def test_normalizing_empty_sentence_is_zero(self):
        vocab = Vocabulary.from_terms(("a",))
        assert sentence_weight(_sentence([]), np.array([3.0]), vocab, normalize=True) == 0.0


class TestSummarize:
    def test_top_n_restores_document_order(self):
        # sentence weights 5, 1, 3 under these row values
        text = "big big big big big. small. mid mid mid."
        matrix = _doc_matrix("d", ("big", "small", "mid"), [1.0, 1.0, 1.0])
        summary = summarize(_doc("d", text), matrix, 2)
        assert [s.sentence.index for s in summary.selected] == [0, 2]
        assert [s.weight for s in summary.selected] == [5.0, 3.0]

    def test_n_larger_than_sentence_count(self):
        text = "one two. three."
        matrix = _doc_matrix("d", ("one", "two", "three"), [1.0, 1.0, 1.0])
        summary = summarize(_doc("d", text), matrix, 10)
        assert len(summary.selected) == 2
        assert summary.n_requested == 10

    def test_ties_pick_earlier_sentence(self):
        text = "same same. same same. same same."
        matrix = _doc_matrix("d", ("same",), [1.0])
        summary = summarize(_doc("d", text), matrix, 1)
        assert summary.selected[0].sentence.index == 0

    def test_single_sentence_document(self):
        matrix = _doc_matrix("d", ("word",), [0.7])
        for n in (1, 2, 5):
            summary = summarize(_doc("d", "word word word"), matrix, n)
            assert len(summary.selected) == 1
            assert summary.selected[0].sentence.index == 0

    def test_whole_document_frequency_row_sums_to_one(self, hand_setup):
        summary = summarize(hand_setup.corpus.doc("b2"), hand_setup.freq, 1)
        assert summary.selected[0].weight == pytest.approx(1.0)

    def test_no_sentences_raises(self):
        matrix = _doc_matrix("d", ("word",), [1.0])
        with pytest.raises(EmptyDocument):
            summarize(_doc("d", "   \n  "), matrix, 2)

    def test_n_below_one(self):
        matrix = _doc_matrix("d", ("word",), [1.0])
        with pytest.raises(DomainError):
            summarize(_doc("d", "word."), matrix, 0)

    def test_selected_are_verbatim_sentences(self):
        text = "Alpha beta gamma. Delta epsilon. Zeta eta theta iota."
        matrix = _doc_matrix("d", ("alpha", "zeta"), [2.0, 1.0])
        summary = summarize(_doc("d", text), matrix, 2)
        originals = [s.text for s in split_sentences(text)]
        positions = [s.sentence.index for s in summary.selected]
        assert positions == sorted(positions)
        for scored in summary.selected:
            assert scored.sentence.text == originals[scored.sentence.index]

    def test_scaling_preserves_selection(self):
        text = "aa bb. bb cc aa. cc. aa aa."
        base = _doc_matrix("d", ("aa", "bb", "cc"), [0.3, 1.1, 0.7])
        scaled = _doc_matrix("d", ("aa", "bb", "cc"), [0.3 * 9.0, 1.1 * 9.0, 0.7 * 9.0])
        pick = lambda m: [s.sentence.index for s in summarize(_doc("d", text), m, 2).selected]
        assert pick(base) == pick(scaled)

    def test_stoplist_does_not_change_weights(self, hand_setup):
        # stop tokens are outside the vocabulary, so they contribute zero
        doc = hand_setup.corpus.doc("b1")
        with_stop = summarize(doc, hand_setup.tfidf, 2, stop=StopList.of(["the", "a"]))
        without = summarize(doc, hand_setup.tfidf, 2)
        assert [s.weight for s in with_stop.selected] == [s.weight for s in without.selected]


def _brute_force_top_n(weights, n):
    """Oracle: repeatedly extract the max weight, earliest index on ties."""
    remaining = list(range(len(weights)))
    chosen = []
    for _ in range(min(n, len(weights))):
        best = remaining[0]
        for i in remaining:
            if weights[i] > weights[best]:
                best = i
        chosen.append(best)
        remaining.remove(best)
    return sorted(chosen)


class TestSelectionContract:
    @given(
        st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=12),
        st.integers(min_value=1, max_value=6),
    )
    def test_matches_brute_force_oracle(self, counts, n):
        # build a document whose sentence weights are the given token counts
        sentences = []
        for c in counts:
            sentences.append(" ".join(["term"] * c) if c else "filler")
        text = ". ".join(sentences) + "."
        matrix = _doc_matrix("d", ("term",), [1.0])
        summary = summarize(_doc("d", text), matrix, n)
        weights = [float(c) for c in counts]
        expected = _brute_force_top_n(weights, n)
        assert [s.sentence.index for s in summary.selected] == expected
        selected = {s.sentence.index for s in summary.selected}
        unselected = set(range(len(counts))) - selected
        if selected and unselected:
            assert min(weights[i] for i in selected) >= max(weights[i] for i in unselected)


class TestSummarizeCluster:
    def _setup(self, texts, assignment, k):
        docs = [_doc(doc_id, text) for doc_id, text in texts.items()]
        corpus = Corpus.from_documents(docs)
        vocab = Vocabulary.from_terms(("ball", "music"))
        ids = corpus.ids()
        weights = np.ones((len(ids), 2))
        matrix = WeightedMatrix(vocab=vocab, doc_ids=ids, weights=weights, scheme="tfidf")
        clustering = Clustering(
            algorithm="kmeans",
            metric="manhattan",
            k=k,
            seed=0,
            assignment=np.asarray(assignment, dtype=np.int64),
            representatives=np.zeros((k, 2)),
            objective=0.0,
            iterations=0,
        )
        return corpus, matrix, clustering

    def test_summaries_in_corpus_order(self):
        corpus, matrix, clustering = self._setup(
            {"a1": "ball.", "b1": "music.", "c1": "ball music."}, [0, 1, 0], k=2
        )
        summaries = summarize_cluster(0, clustering, corpus, matrix, 1)
        assert [s.doc_id for s in summaries] == ["a1", "c1"]

    def test_absent_ordinal_is_empty_cluster(self):
        corpus, matrix, clustering = self._setup(
            {"a1": "ball.", "b1": "music."}, [0, 0], k=2
        )
        with pytest.raises(EmptyCluster):
            summarize_cluster(1, clustering, corpus, matrix, 1)
        with pytest.raises(EmptyCluster):
            summarize_cluster(7, clustering, corpus, matrix, 1)

    def test_sentenceless_member_raises_by_default(self):
        corpus, matrix, clustering = self._setup(
            {"a1": "ball.", "b1": "  "}, [0, 0], k=1
        )
        with pytest.raises(EmptyDocument):
            summarize_cluster(0, clustering, corpus, matrix, 1)

    def test_skip_empty_warns_and_drops(self):
        corpus, matrix, clustering = self._setup(
            {"a1": "ball.", "b1": "  "}, [0, 0], k=1
        )
        with pytest.warns(EmptyDocumentWarning):
            summaries = summarize_cluster(
                0, clustering, corpus, matrix, 1, skip_empty=True
            )
        assert [s.doc_id for s in summaries] == ["a1"]


class TestRendering:
    def test_text_has_header_and_sentences(self):
        matrix = _doc_matrix("d9", ("word",), [1.0])
        summary = summarize(_doc("d9", "word one. word two."), matrix, 2)
        text = summary_to_text(summary)
        assert text.splitlines()[0] == "== d9 =="
        assert "word one." in text and "word two." in text

    def test_dict_fields(self):
        matrix = _doc_matrix("d9", ("word",), [0.5])
        summary = summarize(_doc("d9", "word one. filler."), matrix, 1)
        payload = summary_to_dict(summary)
        assert payload["doc_id"] == "d9"
        assert payload["sentences"] == [{"index": 0, "weight": 0.5, "text": "word one."}]
