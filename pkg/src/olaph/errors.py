"""Exception hierarchy shared across the package."""


class OlaphError(Exception):
    """Base class for all data and resource errors raised by this package."""


class LexiconError(OlaphError):
    """Malformed or inconsistent lexicon file content."""


class CorpusStatsError(OlaphError):
    """Malformed statistics file, or statistics unusable for scoring."""


class NormalizationError(OlaphError):
    """A surface form could not be converted to spoken words."""


class ResourceError(OlaphError):
    """A required resource file is missing or failed to load."""
