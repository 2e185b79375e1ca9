"""Character-trigram language identification.

Profiles hold add-one-smoothed log relative frequencies of character
trigrams. Text is scored by summing trigram log-weights per language; the
winner's confidence is a softmax over the per-language sums. Low-confidence
verdicts fall back to the primary language so that short or ambiguous
spans never flip the pipeline into a foreign lexicon on weak evidence.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ResourceError

DEFAULT_CONFIDENCE_THRESHOLD = 0.35

_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class LanguageProfile:
    """Trigram log-weights for one language plus the unseen-trigram weight."""

    language: str
    ngram_weights: dict[str, float]
    default_weight: float


class LanguageGuess(NamedTuple):
    language: str
    confidence: float
    fallback: bool


def _normalize(text: str) -> str:
    collapsed = _WHITESPACE.sub(" ", text.strip().lower())
    return f" {collapsed} " if collapsed else ""


def _trigrams(text: str) -> Iterable[str]:
    padded = _normalize(text)
    for i in range(len(padded) - 2):
        yield padded[i : i + 3]


def train_language_profiles(
    corpora: Mapping[str, Iterable[str]],
) -> dict[str, LanguageProfile]:
    """Build one profile per language from raw text lines.

    Weights are log((count + 1) / (total + V + 1)) with V the number of
    distinct trigrams, reserving one smoothed slot for unseen trigrams.
    A language with an empty corpus is an error.
    """
    if not corpora:
        raise ValueError("no corpora given")
    profiles: dict[str, LanguageProfile] = {}
    for language, lines in corpora.items():
        counts: dict[str, int] = {}
        total = 0
        for line in lines:
            for tri in _trigrams(line):
                counts[tri] = counts.get(tri, 0) + 1
                total += 1
        if total == 0:
            raise ValueError(f"empty corpus for language {language!r}")
        denom = total + len(counts) + 1
        weights = {tri: math.log((c + 1) / denom) for tri, c in counts.items()}
        profiles[language] = LanguageProfile(
            language, weights, math.log(1.0 / denom)
        )
    return profiles


def detect_language(
    text: str,
    allowed: Sequence[str],
    profiles: Mapping[str, LanguageProfile],
    threshold: float = DEFAULT_CONFIDENCE_THRESHOLD,
) -> LanguageGuess:
    """Identify the language of ``text`` among ``allowed`` codes.

    ``allowed`` is ordered with the primary language first; it is returned
    (flagged as a fallback) for empty input or when the winner's softmax
    confidence stays below ``threshold``.
    """
    if not allowed:
        raise ValueError("allowed languages must be non-empty")
    missing = [code for code in allowed if code not in profiles]
    if missing:
        raise ResourceError(f"no language profile loaded for: {', '.join(missing)}")
    primary = allowed[0]
    tri_counts: dict[str, int] = {}
    for tri in _trigrams(text):
        tri_counts[tri] = tri_counts.get(tri, 0) + 1
    if not tri_counts:
        return LanguageGuess(primary, 0.0, True)
    sums: list[float] = []
    for code in allowed:
        profile = profiles[code]
        sums.append(
            sum(
                count * profile.ngram_weights.get(tri, profile.default_weight)
                for tri, count in tri_counts.items()
            )
        )
    peak = max(sums)
    exps = [math.exp(s - peak) for s in sums]
    norm = sum(exps)
    best_index = max(range(len(allowed)), key=lambda i: (sums[i], -i))
    confidence = exps[best_index] / norm
    if confidence < threshold:
        return LanguageGuess(primary, confidence, True)
    return LanguageGuess(allowed[best_index], confidence, False)


def save_profile(profile: LanguageProfile, path: str | Path) -> None:
    """Write ``trigram <TAB> logweight`` rows (sorted); the first row has an
    empty trigram column and carries the unseen-trigram weight."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"\t{profile.default_weight!r}\n")
        for tri in sorted(profile.ngram_weights):
            fh.write(f"{tri}\t{profile.ngram_weights[tri]!r}\n")


def load_profile(path: str | Path, language: str) -> LanguageProfile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ResourceError(f"profile file not found: {path}") from None
    weights: dict[str, float] = {}
    default: float | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if not raw:
            continue
        tri, sep, weight_col = raw.rpartition("\t")
        if not sep:
            raise ResourceError(f"{path.name}:{lineno}: expected 2 columns")
        try:
            weight = float(weight_col)
        except ValueError:
            raise ResourceError(f"{path.name}:{lineno}: bad weight {weight_col!r}") from None
        if tri == "":
            default = weight
        else:
            weights[tri] = weight
    if default is None or not weights:
        raise ResourceError(f"{path.name}: incomplete profile")
    return LanguageProfile(language, weights, default)
