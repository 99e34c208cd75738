"""Exception and warning types shared across the pipeline."""


class PipelineError(Exception):
    """Base class for every error raised by this package."""


class CorpusEmpty(PipelineError):
    """Corpus directory holds fewer than two readable text files."""


class IngestError(PipelineError):
    """A corpus file could not be read; the message names the file."""


class UnlabeledDocument(PipelineError):
    """A document without a domain label reached a step that needs labels."""


class UnknownDocument(PipelineError):
    """Lookup of a document id that is not part of the corpus or matrix."""


class EmptyVocabulary(PipelineError):
    """No terms survive stop-word removal across the whole corpus."""


class EmptyDocument(PipelineError):
    """A document with no sentences was asked for a summary."""


class EmptyCluster(PipelineError):
    """A cluster ordinal with no member documents."""


class DomainError(PipelineError):
    """Argument outside its mathematical or configured domain."""


class DimensionError(PipelineError):
    """Vector or matrix operands of mismatched dimension."""


class TooManyClusters(PipelineError):
    """Requested cluster count exceeds the number of data rows."""


class IncomparableReports(PipelineError):
    """Efficiency reports that do not describe the same corpus."""


class ParseError(PipelineError):
    """Malformed ARFF input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IoError(PipelineError):
    """Write to an output sink failed."""


class EmptyDocumentWarning(UserWarning):
    """A document contributed no tokens; its weight row is all zeros."""
