"""Cluster quality scoring against document domain labels.

A cluster's efficiency is the percentage of its members that carry the
cluster's majority label.  Efficiencies are kept as exact rationals for
comparisons and rounded (2 decimals, half up) only for display.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .clustering import Clustering
from .corpus import Corpus
from .errors import (
    DimensionError,
    DomainError,
    EmptyCluster,
    IncomparableReports,
    UnlabeledDocument,
)


def format_percent(value: Fraction) -> str:
    """Render a non-negative percentage with exactly 2 decimals, half up."""
    if value < 0:
        raise DomainError(f"percentage must be >= 0, got {value}")
    q, r = divmod(100 * value.numerator, value.denominator)
    if 2 * r >= value.denominator:
        q += 1
    return f"{q // 100}.{q % 100:02d}"


def efficiency(majority_count: int, size: int) -> Fraction:
    """Exact percentage 100 * majority_count / size."""
    if size < 1:
        raise DomainError(f"cluster size must be >= 1, got {size}")
    if not 1 <= majority_count <= size:
        raise DomainError(f"majority count {majority_count} outside [1, {size}]")
    return Fraction(100 * majority_count, size)


@dataclass(frozen=True)
class ClusterScore:
    cluster: int
    size: int
    majority_label: str
    majority_count: int
    efficiency: Fraction

    def efficiency_display(self) -> str:
        return format_percent(self.efficiency) + "%"


@dataclass(frozen=True)
class EfficiencyReport:
    """Per-cluster scores for one clustering run, empty clusters omitted."""

    algorithm: str
    scores: tuple[ClusterScore, ...]
    mean_efficiency: Fraction
    total_majority: int

    @property
    def n_documents(self) -> int:
        return sum(s.size for s in self.scores)


def cluster_efficiency(clustering: Clustering, corpus: Corpus) -> EfficiencyReport:
    """Score every non-empty cluster by majority-label share.

    Label ties inside a cluster break toward the lexicographically
    smallest label.
    """
    if len(clustering.assignment) != len(corpus):
        raise DimensionError(
            f"{len(clustering.assignment)} assignments for {len(corpus)} documents"
        )
    labels = []
    for doc in corpus:
        if doc.label is None:
            raise UnlabeledDocument(f"document {doc.id!r} has no domain label")
        labels.append(doc.label)

    scores = []
    for ordinal in range(clustering.k):
        members = [labels[i] for i, c in enumerate(clustering.assignment) if c == ordinal]
        if not members:
            continue
        counts = Counter(members)
        majority_label = min(counts, key=lambda lab: (-counts[lab], lab))
        majority_count = counts[majority_label]
        scores.append(
            ClusterScore(
                cluster=ordinal,
                size=len(members),
                majority_label=majority_label,
                majority_count=majority_count,
                efficiency=efficiency(majority_count, len(members)),
            )
        )
    mean = sum((s.efficiency for s in scores), Fraction(0)) / len(scores)
    return EfficiencyReport(
        algorithm=clustering.algorithm,
        scores=tuple(scores),
        mean_efficiency=mean,
        total_majority=sum(s.majority_count for s in scores),
    )


def best_cluster(report: EfficiencyReport) -> int:
    """Ordinal of the strongest cluster.

    Ranking: highest efficiency, then larger size, then lower ordinal.
    """
    if not report.scores:
        raise EmptyCluster("report has no clusters")
    best = max(report.scores, key=lambda s: (s.efficiency, s.size, -s.cluster))
    return best.cluster


@dataclass(frozen=True)
class ComparisonTable:
    """Side-by-side view of two reports over the same corpus."""

    first: EfficiencyReport
    second: EfficiencyReport
    winner: str | None  # algorithm tag, None on a tie

    def rows(self) -> list[tuple[str, int, int, str]]:
        out = []
        for report in (self.first, self.second):
            for s in report.scores:
                out.append((report.algorithm, s.cluster, s.size, s.efficiency_display()))
        return out


def compare(a: EfficiencyReport, b: EfficiencyReport) -> ComparisonTable:
    """Pair two reports and pick a winner by mean efficiency."""
    if not a.scores or not b.scores:
        raise IncomparableReports("cannot compare an empty report")
    if a.n_documents != b.n_documents:
        raise IncomparableReports(
            f"reports cover {a.n_documents} vs {b.n_documents} documents"
        )
    if a.mean_efficiency > b.mean_efficiency:
        winner = a.algorithm
    elif b.mean_efficiency > a.mean_efficiency:
        winner = b.algorithm
    else:
        winner = None
    return ComparisonTable(first=a, second=b, winner=winner)


def report_to_dict(report: EfficiencyReport) -> dict:
    return {
        "algorithm": report.algorithm,
        "clusters": [
            {
                "cluster": s.cluster,
                "size": s.size,
                "majority_label": s.majority_label,
                "majority_count": s.majority_count,
                "efficiency": format_percent(s.efficiency),
            }
            for s in report.scores
        ],
        "mean_efficiency": format_percent(report.mean_efficiency),
        "total_majority": report.total_majority,
    }


def comparison_to_dict(table: ComparisonTable) -> dict:
    return {
        "reports": [report_to_dict(table.first), report_to_dict(table.second)],
        "winner": table.winner,
        "mean_efficiency": {
            table.first.algorithm: format_percent(table.first.mean_efficiency),
            table.second.algorithm: format_percent(table.second.mean_efficiency),
        },
    }


_HEADER = ("Algorithm", "Cluster number", "Number of documents", "Efficiency")


def _layout(rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def report_to_text(report: EfficiencyReport) -> str:
    rows = [_HEADER]
    for s in report.scores:
        rows.append((report.algorithm, str(s.cluster), str(s.size), s.efficiency_display()))
    table = _layout(rows)
    return table + (
        f"\nMean efficiency: {report.algorithm} {format_percent(report.mean_efficiency)}%\n"
    )


def comparison_to_text(table: ComparisonTable) -> str:
    rows = [_HEADER]
    for algorithm, cluster, size, eff in table.rows():
        rows.append((algorithm, str(cluster), str(size), eff))
    text = _layout(rows)
    text += (
        f"\nMean efficiency: {table.first.algorithm} "
        f"{format_percent(table.first.mean_efficiency)}%"
        f"  {table.second.algorithm} {format_percent(table.second.mean_efficiency)}%\n"
    )
    if table.winner is None:
        text += "Winner by mean efficiency: tie\n"
    else:
        text += f"Winner by mean efficiency: {table.winner}\n"
    return text
