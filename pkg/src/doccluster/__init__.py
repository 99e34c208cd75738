"""Document clustering and extractive summarization over weighted term vectors."""

from .clustering import (
    ALGORITHMS,
    METRICS,
    Clustering,
    derive_seed,
    distance,
    kmeans,
    kmedoids,
    pairwise_distances,
    run_restarts,
    total_cost,
)
from .config import PipelineConfig, parse_config_file, resolve_config
from .corpus import (
    DEFAULT_LABEL_RULE,
    DEFAULT_PREFIX_LABELS,
    Corpus,
    Document,
    LabelRule,
    load_corpus,
)
from .errors import (
    CorpusEmpty,
    DimensionError,
    DomainError,
    EmptyCluster,
    EmptyDocument,
    EmptyDocumentWarning,
    EmptyVocabulary,
    IncomparableReports,
    IngestError,
    IoError,
    ParseError,
    PipelineError,
    TooManyClusters,
    UnknownDocument,
    UnlabeledDocument,
)
from .evaluation import (
    ClusterScore,
    ComparisonTable,
    EfficiencyReport,
    best_cluster,
    cluster_efficiency,
    compare,
    format_percent,
)
from .interop import ArffTable, read_arff, write_arff, write_report
from .preprocess import Sentence, StopList, remove_stopwords, split_sentences, tokenize
from .summarization import (
    ScoredSentence,
    Summary,
    sentence_weight,
    summarize,
    summarize_cluster,
)
from .synthetic import generate_corpus
from .weighting import (
    SCHEMES,
    Vocabulary,
    WeightedMatrix,
    build_matrix,
    build_vocabulary,
    frequency_weight,
    inverse_document_frequency,
    term_frequency,
    tfidf_weight,
    write_matrix_csv,
)

__version__ = "0.1.0"
