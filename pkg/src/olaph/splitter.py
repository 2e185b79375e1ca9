"""Probabilistic compound splitting.

A word missing from every lexicon is decomposed into subwords that are all
individually pronounceable. Every exact cover of the word by candidate
subwords is enumerated, and each cover is scored as

    score = n^(-beta) * sum_s  P(s) * (len(s) / len(word))^alpha * L(s)

where ``n`` is the number of subwords in the cover, ``P(s)`` the corpus
probability of subword ``s``, ``len`` counts characters, and ``L`` is a
short-subword penalty (0.1 for one letter, 0.5 for two, 1 otherwise). The
count factor ``n^(-beta)`` is constant within a cover and steers the
argmax toward fewer, longer subwords as ``beta`` grows; ``alpha`` weights
the relative-length term.

The aggregate is a sum over subword terms, not a product, so scores are
comparable only within one candidate set and are never normalized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol, Sequence

from .corpus_stats import CorpusStats, probability
from .lexicon import Lexicon, lookup

MAX_WORD_LENGTH = 64
DEFAULT_MAX_SUBWORDS = 8

Candidate = Callable[[str], Optional[tuple[str, str]]]


class Detector(Protocol):
    def __call__(self, text: str, allowed: Sequence[str]) -> object: ...


@dataclass(frozen=True)
class ScoreParams:
    """Scoring knobs: ``alpha`` weights relative subword length, ``beta``
    penalizes the number of subwords (default 15)."""

    alpha: float = 1.0
    beta: float = 15.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not (value >= 0 and value == value and value != float("inf")):
                raise ValueError(f"{name} must be finite and non-negative")


@dataclass(frozen=True)
class Subword:
    surface: str
    language: str
    phonemes: str


@dataclass
class Segmentation:
    """An ordered exact cover of ``word`` plus its score."""

    word: str
    subwords: list[Subword] = field(default_factory=list)
    score: float = 0.0

    def surfaces(self) -> list[str]:
        return [s.surface for s in self.subwords]

    def split_positions(self) -> tuple[int, ...]:
        positions: list[int] = []
        offset = 0
        for sub in self.subwords[:-1]:
            offset += len(sub.surface)
            positions.append(offset)
        return tuple(positions)

    def is_exact_cover(self) -> bool:
        return "".join(self.surfaces()).casefold() == self.word.casefold()


def length_penalty(subword: str) -> float:
    """0.1 for single-letter subwords, 0.5 for two letters, 1 otherwise."""
    n = len(subword)
    if n == 1:
        return 0.1
    if n == 2:
        return 0.5
    return 1.0


def enumerate_segmentations(
    word: str,
    is_candidate: Candidate,
    max_subwords: int = DEFAULT_MAX_SUBWORDS,
    max_length: int = MAX_WORD_LENGTH,
) -> list[Segmentation]:
    """All exact covers of ``word`` whose every piece satisfies
    ``is_candidate``, ordered by split positions ascending.

    Covers are built by recursion over the start offset with a memo table,
    so shared suffixes are enumerated once. Covers longer than
    ``max_subwords`` pieces are discarded during recursion.
    """
    if len(word) > max_length:
        raise ValueError(f"word length {len(word)} exceeds cap {max_length}")
    if max_subwords < 1:
        raise ValueError("max_subwords must be >= 1")
    if not word:
        return []

    n = len(word)
    memo: dict[int, list[list[Subword]]] = {n: [[]]}

    def covers_from(start: int) -> list[list[Subword]]:
        cached = memo.get(start)
        if cached is not None:
            return cached
        result: list[list[Subword]] = []
        for end in range(start + 1, n + 1):
            piece = word[start:end]
            hit = is_candidate(piece)
            if hit is None:
                continue
            language, phonemes = hit
            head = Subword(piece, language, phonemes)
            for tail in covers_from(end):
                if len(tail) + 1 <= max_subwords:
                    result.append([head] + tail)
        memo[start] = result
        return result

    segmentations = [Segmentation(word, cover) for cover in covers_from(0)]
    segmentations.sort(key=lambda seg: seg.split_positions())
    return segmentations


def score_segmentation(seg: Segmentation, stats: CorpusStats, params: ScoreParams) -> float:
    """Score one segmentation with the subword-combination formula."""
    if not seg.subwords or not seg.is_exact_cover():
        raise ValueError(f"segmentation does not cover {seg.word!r} exactly")
    word_len = len(seg.word)
    acc = 0.0
    for sub in seg.subwords:
        p = probability(stats, sub.surface)
        acc += p * (len(sub.surface) / word_len) ** params.alpha * length_penalty(sub.surface)
    return acc * len(seg.subwords) ** -params.beta


def attribute_language(
    subword: str,
    lexica: Sequence[Lexicon],
    detector: Optional[Detector] = None,
) -> tuple[str, str]:
    """Decide which language (and thus pronunciation) a subword belongs to.

    Unique lexicon membership wins outright. When several lexica contain
    the subword, the detector's verdict is used if it names one of them;
    otherwise the primary (first) language is chosen.
    """
    matches: list[tuple[str, str]] = []
    for lex in lexica:
        phonemes = lookup(lex, subword)
        if phonemes is not None:
            matches.append((lex.language, phonemes))
    if not matches:
        raise ValueError(f"{subword!r} is not present in any lexicon")
    if len(matches) == 1:
        return matches[0]
    if detector is not None:
        verdict = detector(subword, [lang for lang, _ in matches])
        code = getattr(verdict, "language", verdict)
        for lang, phonemes in matches:
            if lang == code:
                return lang, phonemes
    return matches[0]


def best_split(
    word: str,
    lexica: Sequence[Lexicon],
    stats: CorpusStats,
    params: ScoreParams = ScoreParams(),
    detector: Optional[Detector] = None,
    max_subwords: int = DEFAULT_MAX_SUBWORDS,
    max_length: int = MAX_WORD_LENGTH,
) -> Optional[Segmentation]:
    """Highest-scoring segmentation of ``word``, or None when no cover
    exists. Ties break toward fewer subwords, then toward the earlier
    cover in enumeration order."""
    if not word:
        raise ValueError("best_split requires a non-empty word")

    cache: dict[str, Optional[tuple[str, str]]] = {}

    def candidate(piece: str) -> Optional[tuple[str, str]]:
        key = piece.casefold()
        if key not in cache:
            if any(piece in lex for lex in lexica):
                cache[key] = attribute_language(piece, lexica, detector)
            else:
                cache[key] = None
        return cache[key]

    segmentations = enumerate_segmentations(word, candidate, max_subwords, max_length)
    if not segmentations:
        return None
    best: Optional[Segmentation] = None
    best_key: Optional[tuple] = None
    for index, seg in enumerate(segmentations):
        seg.score = score_segmentation(seg, stats, params)
        key = (-seg.score, len(seg.subwords), index)
        if best_key is None or key < best_key:
            best, best_key = seg, key
    return best
