"""olaph: deterministic text-to-IPA phonemization.

Hierarchical lexicon lookup with POS-aware homograph resolution, number
and symbol normalization for English and German, rule-based NLP adapters
with trigram language detection, and probabilistic compound splitting for
words absent from every lexicon.
"""

from .corpus_stats import CorpusStats, build_stats, load_stats, probability, save_stats
from .errors import (
    CorpusStatsError,
    LexiconError,
    NormalizationError,
    OlaphError,
    ResourceError,
)
from .evaluate import align_outputs, strip_verbose
from .lexicon import (
    AuxLexica,
    Lexicon,
    LexiconEntry,
    expand_symbol,
    load_lexicon,
    lookup,
    lookup_abbreviation,
    spell_out,
)
from .pipeline import (
    PhonemizedWord,
    PipelineConfig,
    Punctuation,
    SentenceResult,
    phonemize_sentence,
    phonemize_text,
    phonemize_word,
    render_plain,
    sentence_to_record,
)
from .resources import Resources, available_languages, default_data_dir, load_resources
from .splitter import (
    ScoreParams,
    Segmentation,
    best_split,
    enumerate_segmentations,
    score_segmentation,
)

__version__ = "0.1.0"

__all__ = [
    "AuxLexica",
    "CorpusStats",
    "CorpusStatsError",
    "Lexicon",
    "LexiconEntry",
    "LexiconError",
    "NormalizationError",
    "OlaphError",
    "PhonemizedWord",
    "PipelineConfig",
    "Punctuation",
    "Resources",
    "ResourceError",
    "ScoreParams",
    "Segmentation",
    "SentenceResult",
    "align_outputs",
    "available_languages",
    "best_split",
    "build_stats",
    "default_data_dir",
    "enumerate_segmentations",
    "expand_symbol",
    "load_lexicon",
    "load_resources",
    "load_stats",
    "lookup",
    "lookup_abbreviation",
    "phonemize_sentence",
    "phonemize_text",
    "phonemize_word",
    "probability",
    "render_plain",
    "save_stats",
    "score_segmentation",
    "sentence_to_record",
    "spell_out",
    "strip_verbose",
    "__version__",
]
