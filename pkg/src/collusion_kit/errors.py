"""Exception types shared across the toolkit."""


class CollusionKitError(Exception):
    """Base class for all toolkit errors."""


class CorpusError(CollusionKitError):
    """Raised for unreadable corpora or corpora with zero valid tweets."""


class EmptyCollectionError(CollusionKitError):
    """Raised when a traced hashtag matches no tweets in the store."""


class SchemaError(CollusionKitError):
    """Raised for invalid bucket schemes or malformed schema files."""


class SchemaMismatchError(CollusionKitError):
    """Raised when data and model disagree on the feature schema hash."""


class LearnError(CollusionKitError):
    """Raised for invalid training requests (bad task/model combination, degenerate data)."""
