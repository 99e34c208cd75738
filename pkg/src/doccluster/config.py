"""Pipeline configuration: defaults, flat key=value files, merging."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Mapping

from .clustering import ALGORITHMS, METRICS
from .corpus import DEFAULT_PREFIX_LABELS
from .errors import DomainError, IngestError
from .weighting import SCHEMES

ALGORITHM_CHOICES = ALGORITHMS + ("both",)

DEFAULT_K = 5
DEFAULT_METRIC = "manhattan"
DEFAULT_SCHEME = "tfidf"
DEFAULT_ALGORITHM = "both"
DEFAULT_SEED = 42
DEFAULT_RESTARTS = 10
DEFAULT_SUMMARY_SENTENCES = 3


@dataclass(frozen=True)
class PipelineConfig:
    corpus_dir: Path | None = None
    out_dir: Path | None = None
    prefix_labels: tuple[tuple[str, str], ...] = tuple(DEFAULT_PREFIX_LABELS.items())
    stoplist_path: Path | None = None
    scheme: str = DEFAULT_SCHEME
    k: int = DEFAULT_K
    metric: str = DEFAULT_METRIC
    algorithm: str = DEFAULT_ALGORITHM
    seed: int = DEFAULT_SEED
    restarts: int = DEFAULT_RESTARTS
    max_terms: int | None = None
    summary_sentences: int = DEFAULT_SUMMARY_SENTENCES
    normalize_summary: bool = False


_FIELD_NAMES = {f.name for f in fields(PipelineConfig)}

_TRUE = {"true", "1", "yes", "on"}
_FALSE = {"false", "0", "no", "off"}


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"config key {key} needs an integer, got {raw!r}") from None


def _parse_prefix_labels(raw: str) -> tuple[tuple[str, str], ...]:
    pairs = []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        prefix, sep, label = item.partition(":")
        if not sep or not prefix.strip() or not label.strip():
            raise DomainError(f"bad prefix_labels entry {item!r}, expected prefix:label")
        pairs.append((prefix.strip(), label.strip()))
    if not pairs:
        raise DomainError("prefix_labels must list at least one prefix:label pair")
    return tuple(pairs)


def coerce_value(key: str, raw: str):
    """Convert a raw config-file string to the field's type."""
    if key in ("k", "seed", "restarts", "max_terms", "summary_sentences"):
        return _parse_int(key, raw)
    if key in ("corpus_dir", "out_dir", "stoplist_path"):
        return Path(raw)
    if key == "normalize_summary":
        lowered = raw.strip().lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise DomainError(f"config key {key} needs a boolean, got {raw!r}")
    if key == "prefix_labels":
        return _parse_prefix_labels(raw)
    return raw


def parse_config_file(path: str | Path) -> dict[str, object]:
    """Read a flat key=value file; '#' starts a comment, blank lines skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read config file {path}: {exc}") from exc
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DomainError(f"config line {lineno}: expected key=value, got {raw!r}")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in _FIELD_NAMES:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
        values[key] = coerce_value(key, value)
    return values


def validate_config(config: PipelineConfig, require_paths: bool = True) -> None:
    if require_paths:
        if config.corpus_dir is None:
            raise DomainError("corpus_dir is required (flag or config file)")
        if config.out_dir is None:
            raise DomainError("out_dir is required (flag or config file)")
    if config.k < 1:
        raise DomainError(f"k must be >= 1, got {config.k}")
    if config.restarts < 1:
        raise DomainError(f"restarts must be >= 1, got {config.restarts}")
    if config.summary_sentences < 1:
        raise DomainError(
            f"summary_sentences must be >= 1, got {config.summary_sentences}"
        )
    if config.seed < 0:
        raise DomainError(f"seed must be >= 0, got {config.seed}")
    if config.max_terms is not None and config.max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {config.max_terms}")
    if config.scheme not in SCHEMES:
        raise DomainError(f"unknown scheme {config.scheme!r}; expected one of {SCHEMES}")
    if config.metric not in METRICS:
        raise DomainError(f"unknown metric {config.metric!r}; expected one of {METRICS}")
    if config.algorithm not in ALGORITHM_CHOICES:
        raise DomainError(
            f"unknown algorithm {config.algorithm!r}; expected one of {ALGORITHM_CHOICES}"
        )


def resolve_config(
    overrides: Mapping[str, object],
    config_path: str | Path | None = None,
) -> PipelineConfig:
    """Layer explicit overrides on top of config-file values on top of defaults."""
    values: dict[str, object] = {}
    if config_path is not None:
        values.update(parse_config_file(config_path))
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in _FIELD_NAMES:
            raise DomainError(f"unknown config key {key!r}")
        values[key] = value
    config = PipelineConfig(**values)  # type: ignore[arg-type]
    validate_config(config)
    return config
