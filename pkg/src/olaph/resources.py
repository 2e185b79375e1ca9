"""Loading and validating the per-language resource bundle: pronunciation
lexica, auxiliary lexica, corpus statistics, language profiles, and
gazetteers."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

try:
    from importlib.resources import files as _package_files
except ImportError:  # pragma: no cover
    _package_files = None

from .corpus_stats import CorpusStats, load_stats
from .errors import ResourceError
from .langid import (
    DEFAULT_CONFIDENCE_THRESHOLD,
    LanguageGuess,
    LanguageProfile,
    detect_language,
    load_profile,
)
from .lexicon import AuxLexica, Lexicon, load_aux_lexica, load_lexicon
from .nlp import Gazetteer, load_gazetteer

CANONICAL_LANGUAGE_ORDER = ("en", "de", "fr", "es")


def default_data_dir() -> Path:
    """The fixture data shipped with the package."""
    return Path(str(_package_files("olaph") / "data"))


def available_languages(data_dir: str | Path) -> list[str]:
    """Languages for which both a lexicon and statistics exist, in
    canonical order followed by any extras alphabetically."""
    data_dir = Path(data_dir)
    found = set()
    for lex_path in data_dir.glob("lex.*.tsv"):
        code = lex_path.name.split(".")[1]
        if (data_dir / f"stats.{code}.tsv").exists():
            found.add(code)
    ordered = [c for c in CANONICAL_LANGUAGE_ORDER if c in found]
    ordered += sorted(found - set(CANONICAL_LANGUAGE_ORDER))
    return ordered


@dataclass
class Resources:
    """Immutable bundle shared by all pipeline calls."""

    data_dir: Path
    languages: list[str]
    lexica: dict[str, Lexicon] = field(default_factory=dict)
    aux: dict[str, AuxLexica] = field(default_factory=dict)
    stats: dict[str, CorpusStats] = field(default_factory=dict)
    profiles: dict[str, LanguageProfile] = field(default_factory=dict)
    gazetteers: dict[str, Gazetteer] = field(default_factory=dict)

    def detect(
        self,
        text: str,
        allowed: Sequence[str],
        threshold: float = DEFAULT_CONFIDENCE_THRESHOLD,
    ) -> LanguageGuess:
        """Detect among ``allowed`` (primary first), falling back to the
        primary when profiles are missing."""
        usable = [code for code in allowed if code in self.profiles]
        if not usable or usable[0] != allowed[0]:
            return LanguageGuess(allowed[0], 0.0, True)
        return detect_language(text, usable, self.profiles, threshold)


def load_resources(data_dir: str | Path | None, languages: Sequence[str]) -> Resources:
    """Load all resources for ``languages`` from ``data_dir`` (the packaged
    fixture data when None).

    A missing lexicon or statistics file for any requested language is an
    error naming the file; auxiliary lexica, profiles, and gazetteers are
    optional per language.
    """
    directory = Path(data_dir) if data_dir is not None else default_data_dir()
    if not directory.is_dir():
        raise ResourceError(f"resource directory not found: {directory}")
    if not languages:
        raise ResourceError("at least one language required")
    res = Resources(directory, list(languages))
    for code in languages:
        lex_path = directory / f"lex.{code}.tsv"
        if not lex_path.exists():
            raise ResourceError(f"missing lexicon file: lex.{code}.tsv")
        stats_path = directory / f"stats.{code}.tsv"
        if not stats_path.exists():
            raise ResourceError(f"missing statistics file: stats.{code}.tsv")
        res.lexica[code] = load_lexicon(lex_path, code)
        res.stats[code] = load_stats(stats_path)
        res.aux[code] = load_aux_lexica(directory, code)
        profile_path = directory / f"profile.{code}.tsv"
        if profile_path.exists():
            res.profiles[code] = load_profile(profile_path, code)
        names_path = directory / f"names.{code}.txt"
        if names_path.exists():
            res.gazetteers[code] = load_gazetteer(names_path)
    return res
