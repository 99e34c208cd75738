"""ARFF and report serialization.

The ARFF writer emits the exact subset the reader parses: a relation
line, ``@attribute w<i> numeric`` per vocabulary term, one nominal
``doc`` attribute listing every document id, ``@data``, and one
comma-separated row per document.  Output is byte-identical across runs
for identical input: floats use shortest round-trip decimals and lines
end with a single line feed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence, Union

import numpy as np

from .errors import DomainError, IoError, ParseError
from .evaluation import (
    ComparisonTable,
    EfficiencyReport,
    comparison_to_dict,
    comparison_to_text,
    report_to_dict,
    report_to_text,
)
from .summarization import Summary, summary_to_dict, summary_to_text
from .weighting import WeightedMatrix

Sink = Union[str, Path, IO[str]]

_UNSAFE = re.compile(r"[\s,'\"{}%\\]")


def quote_value(value: str) -> str:
    """Quote an ARFF value when it contains separators or quote characters."""
    if value and not _UNSAFE.search(value):
        return value
    escaped = value.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def _write_text(out: Sink, text: str) -> int:
    try:
        if isinstance(out, (str, Path)):
            with open(out, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        else:
            out.write(text)
    except (OSError, ValueError) as exc:
        raise IoError(f"write failed: {exc}") from exc
    return len(text.encode("utf-8"))


def write_arff(matrix: WeightedMatrix, relation_name: str, out: Sink) -> int:
    """Serialize the matrix as ARFF; returns the byte count written."""
    if matrix.n_docs == 0 or len(matrix.vocab) == 0:
        raise DomainError("cannot serialize an empty matrix")
    lines = [f"@relation {quote_value(relation_name)}"]
    for i in range(1, len(matrix.vocab) + 1):
        lines.append(f"@attribute w{i} numeric")
    ids = ",".join(quote_value(d) for d in matrix.doc_ids)
    lines.append(f"@attribute doc {{{ids}}}")
    lines.append("@data")
    for row, doc_id in zip(matrix.weights, matrix.doc_ids):
        cells = [repr(float(w)) for w in row]
        cells.append(quote_value(doc_id))
        lines.append(",".join(cells))
    return _write_text(out, "\n".join(lines) + "\n")


@dataclass(frozen=True, eq=False)
class ArffTable:
    """Parsed ARFF content, aligned with WeightedMatrix fields."""

    relation: str
    attributes: tuple[str, ...]  # numeric attribute names, in file order
    declared_ids: tuple[str, ...]  # nominal value set of the doc attribute
    doc_ids: tuple[str, ...]  # per data row, in file order
    weights: np.ndarray  # (n_rows, n_attributes) float64


def _split_fields(text: str, lineno: int) -> list[str]:
    """Split on commas, honoring single-quoted fields with backslash escapes."""
    fields: list[str] = []
    buf: list[str] = []
    quoted = False
    in_quote = False
    i = 0
    while i < len(text):
        ch = text[i]
        if in_quote:
            if ch == "\\" and i + 1 < len(text):
                buf.append(text[i + 1])
                i += 2
                continue
            if ch == "'":
                in_quote = False
                i += 1
                continue
            buf.append(ch)
            i += 1
            continue
        if ch == "'" and not buf:
            in_quote = True
            quoted = True
            i += 1
            continue
        if ch == ",":
            fields.append("".join(buf) if quoted else "".join(buf).strip())
            buf = []
            quoted = False
            i += 1
            continue
        buf.append(ch)
        i += 1
    if in_quote:
        raise ParseError("unterminated quote", lineno)
    fields.append("".join(buf) if quoted else "".join(buf).strip())
    return fields


def _read_lines(source: Union[str, Path, IO[str]]) -> list[str]:
    try:
        if isinstance(source, (str, Path)):
            return Path(source).read_text(encoding="utf-8").splitlines()
        return source.read().splitlines()
    except (OSError, ValueError) as exc:
        raise IoError(f"read failed: {exc}") from exc


def read_arff(source: Union[str, Path, IO[str]]) -> ArffTable:
    """Parse the ARFF subset produced by write_arff."""
    relation: str | None = None
    attributes: list[str] = []
    declared: tuple[str, ...] | None = None
    doc_ids: list[str] = []
    rows: list[list[float]] = []
    in_data = False

    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        lowered = line.lower()
        if not in_data:
            if lowered.startswith("@relation"):
                if relation is not None:
                    raise ParseError("duplicate @relation", lineno)
                value = line[len("@relation") :].strip()
                relation = _split_fields(value, lineno)[0]
            elif lowered.startswith("@attribute"):
                if relation is None:
                    raise ParseError("@attribute before @relation", lineno)
                rest = line[len("@attribute") :].strip()
                parts = rest.split(None, 1)
                if len(parts) != 2:
                    raise ParseError("malformed attribute declaration", lineno)
                name, kind = parts[0], parts[1].strip()
                if kind.lower() == "numeric":
                    if declared is not None:
                        raise ParseError("numeric attribute after the id attribute", lineno)
                    attributes.append(name)
                elif kind.startswith("{") and kind.endswith("}"):
                    if declared is not None:
                        raise ParseError("second nominal attribute", lineno)
                    declared = tuple(_split_fields(kind[1:-1], lineno))
                else:
                    raise ParseError(f"unsupported attribute type {kind!r}", lineno)
            elif lowered == "@data":
                if relation is None or declared is None:
                    raise ParseError("@data before a complete header", lineno)
                in_data = True
            else:
                raise ParseError(f"unexpected line {line!r}", lineno)
            continue

        fields = _split_fields(line, lineno)
        if len(fields) != len(attributes) + 1:
            raise ParseError(
                f"expected {len(attributes) + 1} fields, got {len(fields)}", lineno
            )
        try:
            rows.append([float(f) for f in fields[:-1]])
        except ValueError:
            raise ParseError("bad numeric value", lineno) from None
        doc_id = fields[-1]
        if doc_id not in declared:
            raise ParseError(f"undeclared document id {doc_id!r}", lineno)
        doc_ids.append(doc_id)

    if not in_data:
        raise ParseError("missing @data section")
    assert relation is not None and declared is not None
    weights = np.array(rows, dtype=np.float64).reshape(len(rows), len(attributes))
    return ArffTable(
        relation=relation,
        attributes=tuple(attributes),
        declared_ids=declared,
        doc_ids=tuple(doc_ids),
        weights=weights,
    )


Report = Union[EfficiencyReport, ComparisonTable, Sequence[Summary]]


def _render_text(artifact: Report) -> str:
    if isinstance(artifact, ComparisonTable):
        return comparison_to_text(artifact)
    if isinstance(artifact, EfficiencyReport):
        return report_to_text(artifact)
    if isinstance(artifact, Sequence) and all(isinstance(s, Summary) for s in artifact):
        return "\n".join(summary_to_text(s) for s in artifact)
    raise DomainError(f"cannot render {type(artifact).__name__}")


def _render_dict(artifact: Report) -> object:
    if isinstance(artifact, ComparisonTable):
        return comparison_to_dict(artifact)
    if isinstance(artifact, EfficiencyReport):
        return report_to_dict(artifact)
    if isinstance(artifact, Sequence) and all(isinstance(s, Summary) for s in artifact):
        return [summary_to_dict(s) for s in artifact]
    raise DomainError(f"cannot render {type(artifact).__name__}")


def write_report(artifact: Report, format: str, out: Sink) -> int:
    """Serialize a report as text or stable-key JSON; returns bytes written."""
    if format == "text":
        text = _render_text(artifact)
    elif format == "json":
        text = json.dumps(_render_dict(artifact), indent=2, sort_keys=True) + "\n"
    else:
        raise DomainError(f"unknown report format {format!r}")
    return _write_text(out, text)
