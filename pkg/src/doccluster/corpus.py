"""Corpus ingestion: a directory of .txt files becomes an ordered, labeled corpus.

Domain labels are derived from filename stems: the leading alphabetic prefix
of the stem is looked up in a prefix->label table (``e1.txt`` -> prefix ``e``).
Files whose prefix is not in the table load fine but stay unlabeled; steps
that need labels raise :class:`~doccluster.errors.UnlabeledDocument` later.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import CorpusEmpty, IngestError, UnknownDocument

DEFAULT_PREFIX_LABELS: Mapping[str, str] = {
    "e": "entertainment",
    "l": "literature",
    "s": "sport",
    "p": "political",
    "z": "zoology",
}


def _alpha_prefix(stem: str) -> str:
    """Longest run of leading alphabetic characters of a filename stem."""
    i = 0
    while i < len(stem) and stem[i].isalpha():
        i += 1
    return stem[:i]


@dataclass(frozen=True)
class LabelRule:
    """Maps filename stems to domain labels through a prefix table."""

    prefix_labels: Mapping[str, str]

    def label_for(self, stem: str) -> str | None:
        return self.prefix_labels.get(_alpha_prefix(stem))


DEFAULT_LABEL_RULE = LabelRule(DEFAULT_PREFIX_LABELS)


@dataclass(frozen=True)
class Document:
    """One text file: id is the filename stem, label may be absent."""

    id: str
    label: str | None
    text: str
    byte_len: int


@dataclass(frozen=True)
class Corpus:
    """Documents in lexicographic id order, so row indices are reproducible."""

    docs: tuple[Document, ...]
    label_set: frozenset[str]
    _by_id: dict[str, Document] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {d.id: d for d in self.docs})

    @classmethod
    def from_documents(cls, docs: Iterable[Document]) -> "Corpus":
        ordered = tuple(sorted(docs, key=lambda d: d.id))
        if len(ordered) < 2:
            raise CorpusEmpty(f"need at least 2 documents, got {len(ordered)}")
        seen: set[str] = set()
        for doc in ordered:
            if doc.id in seen:
                raise IngestError(f"duplicate document id: {doc.id!r}")
            seen.add(doc.id)
        labels = frozenset(d.label for d in ordered if d.label is not None)
        return cls(docs=ordered, label_set=labels)

    def __len__(self) -> int:
        return len(self.docs)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.docs)

    def ids(self) -> tuple[str, ...]:
        return tuple(d.id for d in self.docs)

    def doc(self, doc_id: str) -> Document:
        try:
            return self._by_id[doc_id]
        except KeyError:
            raise UnknownDocument(f"no document with id {doc_id!r}") from None


def load_corpus(root_path: str | Path, label_rule: LabelRule | None = None) -> Corpus:
    """Read every ``*.txt`` file under ``root_path`` into a Corpus.

    Files decode as UTF-8 with invalid bytes replaced; zero-byte files and
    OS-level read failures raise IngestError naming the file.  The same
    directory always yields the same Corpus.
    """
    rule = label_rule or DEFAULT_LABEL_RULE
    root = Path(root_path)
    if not root.is_dir():
        raise IngestError(f"corpus directory does not exist: {root}")
    docs = []
    for path in sorted(root.glob("*.txt")):
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise IngestError(f"cannot read {path}: {exc}") from exc
        if not raw:
            raise IngestError(f"empty file: {path}")
        text = raw.decode("utf-8", errors="replace")
        stem = path.stem
        docs.append(
            Document(id=stem, label=rule.label_for(stem), text=text, byte_len=len(raw))
        )
    if len(docs) < 2:
        raise CorpusEmpty(
            f"{root} holds {len(docs)} text file(s); at least 2 are required"
        )
    return Corpus.from_documents(docs)


def label_of(corpus: Corpus, doc_id: str) -> str | None:
    """Stored label of the given document; UnknownDocument if absent."""
    return corpus.doc(doc_id).label
