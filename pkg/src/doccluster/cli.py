"""Command-line pipeline driver.

Subcommands: gen-corpus, cluster, evaluate, summarize, export-arff.
Every command is deterministic given its flags (and config file), so
repeated runs write byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .clustering import (
    ALGORITHMS,
    METRICS,
    Clustering,
    clustering_from_dict,
    clustering_to_dict,
    run_restarts,
)
from .config import ALGORITHM_CHOICES, PipelineConfig, resolve_config
from .corpus import Corpus, LabelRule, load_corpus
from .errors import PipelineError
from .evaluation import EfficiencyReport, best_cluster, cluster_efficiency, compare
from .interop import write_arff, write_report
from .preprocess import StopList
from .summarization import summarize_cluster, summary_to_text
from .synthetic import generate_corpus
from .weighting import SCHEMES, build_matrix, build_vocabulary, write_matrix_csv


def _fail(command: str, stage: str, exc: BaseException) -> int:
    print(f"{command}: {stage}: {type(exc).__name__}: {exc}", file=sys.stderr)
    return 1


def _label_rule(config: PipelineConfig) -> LabelRule:
    return LabelRule(dict(config.prefix_labels))


def _stoplist(config: PipelineConfig) -> StopList:
    if config.stoplist_path is not None:
        return StopList.from_file(config.stoplist_path)
    return StopList.default()


def _selected_algorithms(config: PipelineConfig) -> tuple[str, ...]:
    if config.algorithm == "both":
        return ALGORITHMS
    return (config.algorithm,)


def _out_dir(config: PipelineConfig) -> Path:
    assert config.out_dir is not None
    config.out_dir.mkdir(parents=True, exist_ok=True)
    return config.out_dir


def _build_matrix(config: PipelineConfig):
    corpus = load_corpus(config.corpus_dir, _label_rule(config))
    stop = _stoplist(config)
    vocab = build_vocabulary(corpus, stop, config.max_terms)
    matrix = build_matrix(corpus, vocab, config.scheme, stop)
    return corpus, stop, matrix


def _write_json(path: Path, payload: object) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    overrides = {
        "corpus_dir": args.corpus_dir,
        "out_dir": args.out_dir,
        "prefix_labels": args.prefix_labels,
        "stoplist_path": args.stoplist_path,
        "scheme": args.scheme,
        "k": args.k,
        "metric": args.metric,
        "algorithm": args.algorithm,
        "seed": args.seed,
        "restarts": args.restarts,
        "max_terms": args.max_terms,
        "summary_sentences": args.summary_sentences,
        "normalize_summary": args.normalize_summary,
    }
    return resolve_config(overrides, args.config)


def cmd_cluster(args: argparse.Namespace) -> int:
    stage = "config"
    try:
        config = _config_from_args(args)
        stage = "ingest"
        corpus, stop, matrix = _build_matrix(config)
        stage = "clustering"
        results: dict[str, Clustering] = {}
        for algorithm in _selected_algorithms(config):
            results[algorithm] = run_restarts(
                matrix, config.k, config.metric, algorithm, config.seed, config.restarts
            )
        stage = "write"
        out = _out_dir(config)
        write_matrix_csv(matrix, out / "matrix.csv")
        for algorithm, clustering in results.items():
            _write_json(
                out / f"clustering_{algorithm}.json",
                clustering_to_dict(clustering, matrix.doc_ids),
            )
    except (PipelineError, OSError) as exc:
        return _fail("cluster", stage, exc)
    return 0


def _load_clusterings(config: PipelineConfig, corpus: Corpus) -> dict[str, Clustering]:
    assert config.out_dir is not None
    found: dict[str, Clustering] = {}
    for algorithm in ALGORITHMS:
        path = config.out_dir / f"clustering_{algorithm}.json"
        if not path.exists():
            continue
        payload = json.loads(path.read_text(encoding="utf-8"))
        found[algorithm] = clustering_from_dict(payload, corpus.ids())
    return found


def cmd_evaluate(args: argparse.Namespace) -> int:
    stage = "config"
    try:
        config = _config_from_args(args)
        stage = "ingest"
        corpus = load_corpus(config.corpus_dir, _label_rule(config))
        stage = "read"
        clusterings = _load_clusterings(config, corpus)
        if not clusterings:
            raise FileNotFoundError(
                f"no clustering_<algorithm>.json files under {config.out_dir}"
            )
        stage = "evaluate"
        reports = {
            alg: cluster_efficiency(c, corpus) for alg, c in clusterings.items()
        }
        stage = "write"
        out = _out_dir(config)
        if len(reports) == 2:
            table = compare(reports["kmeans"], reports["kmedoids"])
            write_report(table, "text", out / "comparison.txt")
            write_report(table, "json", out / "comparison.json")
            winner = table.winner if table.winner is not None else "tie"
            print(f"Winner by mean efficiency: {winner}")
        else:
            (report,) = reports.values()
            write_report(report, "text", out / "comparison.txt")
            write_report(report, "json", out / "comparison.json")
    except (PipelineError, OSError, ValueError, KeyError) as exc:
        return _fail("evaluate", stage, exc)
    return 0


def cmd_summarize(args: argparse.Namespace) -> int:
    stage = "config"
    try:
        config = _config_from_args(args)
        stage = "ingest"
        corpus, stop, matrix = _build_matrix(config)
        stage = "read"
        clusterings = _load_clusterings(config, corpus)
        if not clusterings:
            raise FileNotFoundError(
                f"no clustering_<algorithm>.json files under {config.out_dir}"
            )
        stage = "evaluate"
        reports: dict[str, EfficiencyReport] = {
            alg: cluster_efficiency(c, corpus) for alg, c in clusterings.items()
        }
        if len(reports) == 2:
            table = compare(reports["kmeans"], reports["kmedoids"])
            chosen = table.winner if table.winner is not None else "kmeans"
        else:
            (chosen,) = reports.keys()
        ordinal = best_cluster(reports[chosen])
        stage = "summarize"
        summaries = summarize_cluster(
            ordinal,
            clusterings[chosen],
            corpus,
            matrix,
            config.summary_sentences,
            stop,
            config.normalize_summary,
            skip_empty=True,
        )
        stage = "write"
        out = _out_dir(config)
        write_report(summaries, "json", out / "summaries.json")
        for summary in summaries:
            with open(
                out / f"summary_{summary.doc_id}.txt", "w", encoding="utf-8", newline=""
            ) as handle:
                handle.write(summary_to_text(summary))
        print(
            f"summarized cluster {ordinal} of {chosen}: {len(summaries)} documents"
        )
    except (PipelineError, OSError, ValueError, KeyError) as exc:
        return _fail("summarize", stage, exc)
    return 0


def cmd_export_arff(args: argparse.Namespace) -> int:
    stage = "config"
    try:
        config = _config_from_args(args)
        stage = "ingest"
        corpus, stop, matrix = _build_matrix(config)
        stage = "write"
        out = _out_dir(config)
        write_arff(matrix, "documents", out / "corpus.arff")
    except (PipelineError, OSError) as exc:
        return _fail("export-arff", stage, exc)
    return 0


def cmd_gen_corpus(args: argparse.Namespace) -> int:
    try:
        files = generate_corpus(
            args.out_dir,
            n_domains=args.domains,
            docs_per_domain=args.docs_per_domain,
            seed=args.seed,
        )
    except (PipelineError, OSError) as exc:
        return _fail("gen-corpus", "generate", exc)
    print(f"wrote {len(files)} documents to {args.out_dir}")
    return 0


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="key=value config file")
    parser.add_argument("--corpus-dir", type=Path, default=None)
    parser.add_argument("--out-dir", type=Path, default=None)
    parser.add_argument(
        "--prefix-labels",
        type=_prefix_labels_flag,
        default=None,
        help="comma-separated prefix:label pairs",
    )
    parser.add_argument("--stoplist-path", type=Path, default=None)
    parser.add_argument("--scheme", choices=SCHEMES, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--metric", choices=METRICS, default=None)
    parser.add_argument("--algorithm", choices=ALGORITHM_CHOICES, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--restarts", type=int, default=None)
    parser.add_argument("--max-terms", type=int, default=None)
    parser.add_argument("--summary-sentences", type=int, default=None)
    parser.add_argument(
        "--normalize-summary", action=argparse.BooleanOptionalAction, default=None
    )


def _prefix_labels_flag(raw: str) -> tuple[tuple[str, str], ...]:
    from .config import _parse_prefix_labels

    return _parse_prefix_labels(raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doccluster",
        description="Cluster a labeled document corpus and summarize the best cluster.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-corpus", help="write a deterministic synthetic corpus")
    gen.add_argument("--out-dir", type=Path, required=True)
    gen.add_argument("--domains", type=int, default=5)
    gen.add_argument("--docs-per-domain", type=int, default=20)
    gen.add_argument("--seed", type=int, default=42)
    gen.set_defaults(func=cmd_gen_corpus)

    for name, func, blurb in (
        ("cluster", cmd_cluster, "build the matrix and run the clusterings"),
        ("evaluate", cmd_evaluate, "score stored clusterings against labels"),
        ("summarize", cmd_summarize, "summarize the best cluster's documents"),
        ("export-arff", cmd_export_arff, "write the weighted matrix as ARFF"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_pipeline_flags(p)
        p.set_defaults(func=func)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
