"""Text preprocessing: tokenization, stop-word removal, sentence splitting."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

# Maximal runs of Unicode letters/digits; underscores split like punctuation.
_TOKEN_RE = re.compile(r"[^\W_]+")
# A sentence ends at '.', '!' or '?' when followed by whitespace or end of text.
_SENTENCE_END_RE = re.compile(r"[.!?](?=\s|$)")


def tokenize(text: str) -> list[str]:
    """Lowercase ``text`` and split it on runs of non-alphanumeric characters."""
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class StopList:
    """Set of lowercase words to drop before weighting."""

    words: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def empty(cls) -> "StopList":
        return cls(frozenset())

    @classmethod
    def of(cls, words: Iterable[str]) -> "StopList":
        return cls(frozenset(words))

    @classmethod
    def from_file(cls, path: str | Path) -> "StopList":
        """One word per line; '#' starts a comment; case-insensitive."""
        words = set()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(entry.lower())
        return cls(frozenset(words))

    @classmethod
    def default(cls) -> "StopList":
        """The packaged list of ~150 common English function words."""
        data = resources.files("doccluster.data").joinpath("stopwords.txt")
        words = set()
        for line in data.read_text(encoding="utf-8").splitlines():
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(entry.lower())
        return cls(frozenset(words))


def remove_stopwords(tokens: Sequence[str], stop: StopList) -> list[str]:
    """Subsequence of ``tokens`` with stop-list members removed."""
    return [t for t in tokens if t not in stop]


@dataclass(frozen=True)
class Sentence:
    """A raw sentence plus its filtered token sequence.

    ``index`` is the 0-based position within the document; ``tokens`` holds
    the post-stop-word tokenization of ``text``.
    """

    index: int
    text: str
    tokens: tuple[str, ...]


def split_sentences(text: str, stop: StopList | None = None) -> list[Sentence]:
    """Split ``text`` into sentences on terminator punctuation.

    A sentence ends after '.', '!' or '?' followed by whitespace or end of
    text; a trailing fragment without a terminator becomes the final
    sentence.  Token lists are filtered through ``stop`` when given.
    """
    stop = stop or StopList.empty()
    pieces: list[str] = []
    start = 0
    for match in _SENTENCE_END_RE.finditer(text):
        pieces.append(text[start : match.end()])
        start = match.end()
    if start < len(text):
        pieces.append(text[start:])
    sentences: list[Sentence] = []
    for piece in pieces:
        stripped = piece.strip()
        if not stripped:
            continue
        tokens = tuple(remove_stopwords(tokenize(stripped), stop))
        sentences.append(Sentence(index=len(sentences), text=stripped, tokens=tokens))
    return sentences
