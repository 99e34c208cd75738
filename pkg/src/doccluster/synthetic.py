"""Deterministic generation of labeled synthetic corpora.

Each domain gets a disjoint 30-term topical vocabulary; a separate
30-term pool is shared by all domains.  Every document draws 100 to 200
tokens, 80% topical and 20% shared, from a single seeded generator, so a
given (domains, docs_per_domain, seed) triple always produces the same
bytes.  Files are named <prefix><index>.txt so the default prefix rule
labels them.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .corpus import DEFAULT_PREFIX_LABELS
from .errors import DomainError, IoError

TERMS_PER_DOMAIN = 30
SHARED_TERMS = 30
MIN_TOKENS = 100
MAX_TOKENS = 200

_SYLLABLES = (
    "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du",
    "ga", "ge", "gi", "go", "gu", "ka", "ke", "ki", "ko", "ku",
    "la", "le", "li", "lo", "lu", "ma", "me", "mi", "mo", "mu",
    "na", "ne", "ni", "no", "nu", "ra", "re", "ri", "ro", "ru",
    "sa", "se", "si", "so", "su", "ta", "te", "ti", "to", "tu",
)


def _make_terms(rng: np.random.Generator, count: int, prefix: str, taken: set[str]) -> list[str]:
    terms: list[str] = []
    while len(terms) < count:
        word = prefix + "".join(
            _SYLLABLES[int(rng.integers(len(_SYLLABLES)))] for _ in range(3)
        )
        if word not in taken:
            taken.add(word)
            terms.append(word)
    return terms


def _to_sentences(tokens: list[str], rng: np.random.Generator) -> str:
    parts = []
    i = 0
    while i < len(tokens):
        take = int(rng.integers(6, 13))
        parts.append(" ".join(tokens[i : i + take]) + ".")
        i += take
    return "\n".join(parts) + "\n"


def generate_corpus(
    out_dir: str | Path,
    n_domains: int = 5,
    docs_per_domain: int = 20,
    seed: int = 42,
) -> list[Path]:
    """Write the corpus files and return their paths in creation order."""
    prefixes = list(DEFAULT_PREFIX_LABELS)
    if not 1 <= n_domains <= len(prefixes):
        raise DomainError(
            f"n_domains must be in [1, {len(prefixes)}], got {n_domains}"
        )
    if docs_per_domain < 1:
        raise DomainError(f"docs_per_domain must be >= 1, got {docs_per_domain}")
    if seed < 0:
        raise DomainError(f"seed must be >= 0, got {seed}")

    rng = np.random.default_rng(seed)
    taken: set[str] = set()
    # shared terms take prefix "x", which no domain prefix uses
    shared = _make_terms(rng, SHARED_TERMS, "x", taken)
    topical = {p: _make_terms(rng, TERMS_PER_DOMAIN, p, taken) for p in prefixes[:n_domains]}

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for prefix in prefixes[:n_domains]:
        pool = topical[prefix]
        for index in range(1, docs_per_domain + 1):
            n_tokens = int(rng.integers(MIN_TOKENS, MAX_TOKENS + 1))
            tokens = []
            for _ in range(n_tokens):
                source = pool if rng.random() < 0.8 else shared
                tokens.append(source[int(rng.integers(len(source)))])
            path = out / f"{prefix}{index}.txt"
            try:
                with open(path, "w", encoding="utf-8", newline="") as handle:
                    handle.write(_to_sentences(tokens, rng))
            except OSError as exc:
                raise IoError(f"cannot write {path}: {exc}") from exc
            written.append(path)
    return written
