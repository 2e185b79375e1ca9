"""Subword occurrence statistics backing the compound splitter's
probability estimates.

Counts are collected over maximal alphabetic runs (Unicode-aware, so
umlauts and accented letters stay inside tokens), lowercased. A word seen
``c`` times in a corpus of ``total`` tokens has probability ``c / total``;
words never seen fall back to ``floor_epsilon`` so that lexicon entries
absent from the corpus can still take part in segmentations without
outranking attested ones.

Stats file format (``stats.<lang>.tsv``): header lines ``#total <TAB> N``,
``#lang <TAB> code``, optionally ``#floor <TAB> eps`` when the floor was
configured explicitly, followed by ``word <TAB> count`` rows sorted
lexicographically. Saves are byte-deterministic.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Optional, Union

from .errors import CorpusStatsError

LineStream = Union[Iterable[str], Iterable[bytes], IO[str], IO[bytes]]


@dataclass
class CorpusStats:
    """Lowercased word counts plus their sum; immutable after construction."""

    language: str
    counts: dict[str, int] = field(default_factory=dict)
    total: int = 0
    floor_epsilon: Optional[float] = None  # None -> derived default 0.5/total

    def __post_init__(self) -> None:
        if self.total != sum(self.counts.values()):
            raise CorpusStatsError(
                f"total {self.total} does not equal sum of counts {sum(self.counts.values())}"
            )
        if any(c < 1 for c in self.counts.values()):
            raise CorpusStatsError("all counts must be >= 1")
        if self.floor_epsilon is not None and self.floor_epsilon <= 0:
            raise CorpusStatsError("floor_epsilon must be positive")

    @property
    def floor(self) -> float:
        if self.floor_epsilon is not None:
            return self.floor_epsilon
        if self.total <= 0:
            raise CorpusStatsError("no statistics: total is zero")
        return 0.5 / self.total


def _iter_alpha_runs(line: str) -> Iterable[str]:
    run: list[str] = []
    for ch in line:
        if ch.isalpha():
            run.append(ch)
        elif run:
            yield "".join(run)
            run.clear()
    if run:
        yield "".join(run)


def build_stats(corpus: LineStream, language: str,
                floor_epsilon: Optional[float] = None) -> CorpusStats:
    """Count lowercased alphabetic tokens over a line stream.

    Accepts text or byte lines; undecodable bytes raise CorpusStatsError
    with the byte offset of the failure. Permuting input lines cannot
    change the result.
    """
    counts: dict[str, int] = {}
    total = 0
    byte_offset = 0
    for raw in corpus:
        if isinstance(raw, bytes):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise CorpusStatsError(
                    f"undecodable input at byte offset {byte_offset + exc.start}"
                ) from None
            byte_offset += len(raw)
        else:
            line = raw
            byte_offset += len(raw.encode("utf-8"))
        for token in _iter_alpha_runs(line):
            word = token.lower()
            counts[word] = counts.get(word, 0) + 1
            total += 1
    return CorpusStats(language, counts, total, floor_epsilon)


def probability(stats: CorpusStats, subword: str) -> float:
    """Relative frequency of ``subword`` (case-insensitive), floored for
    unseen words. Errors when no statistics were collected."""
    if stats.total <= 0:
        raise CorpusStatsError("no statistics: total is zero")
    count = stats.counts.get(subword.lower())
    if count:
        return count / stats.total
    return stats.floor


def save_stats(stats: CorpusStats, path: str | Path) -> None:
    """Write a stats file; output bytes are a pure function of the stats."""
    path = Path(path)
    with io.open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"#total\t{stats.total}\n")
        fh.write(f"#lang\t{stats.language}\n")
        if stats.floor_epsilon is not None:
            fh.write(f"#floor\t{stats.floor_epsilon!r}\n")
        for word in sorted(stats.counts):
            fh.write(f"{word}\t{stats.counts[word]}\n")


def load_stats(path: str | Path) -> CorpusStats:
    """Parse and validate a stats file.

    The declared total must equal the sum of counts, and every count must
    be a positive integer; violations name the offending line.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise CorpusStatsError(f"stats file not found: {path}") from None
    declared_total: Optional[int] = None
    language = ""
    floor: Optional[float] = None
    counts: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if raw.startswith("#"):
            cols = raw.split("\t")
            if cols[0] == "#total" and len(cols) == 2:
                declared_total = int(cols[1])
            elif cols[0] == "#lang" and len(cols) == 2:
                language = cols[1]
            elif cols[0] == "#floor" and len(cols) == 2:
                floor = float(cols[1])
            continue
        cols = raw.split("\t")
        if len(cols) != 2:
            raise CorpusStatsError(f"{path.name}:{lineno}: expected 2 columns")
        word, count_col = cols
        try:
            count = int(count_col)
        except ValueError:
            raise CorpusStatsError(
                f"{path.name}:{lineno}: count {count_col!r} is not an integer"
            ) from None
        if count < 1:
            raise CorpusStatsError(f"{path.name}:{lineno}: count must be >= 1")
        if word in counts:
            raise CorpusStatsError(f"{path.name}:{lineno}: duplicate word {word!r}")
        counts[word] = count
    if declared_total is None:
        raise CorpusStatsError(f"{path.name}: missing #total header")
    if not language:
        # Fall back to the stats.<lang>.tsv naming convention.
        parts = path.name.split(".")
        language = parts[1] if len(parts) == 3 else "und"
    actual = sum(counts.values())
    if declared_total != actual:
        raise CorpusStatsError(
            f"{path.name}: declared total {declared_total} != sum of counts {actual}"
        )
    return CorpusStats(language, counts, declared_total, floor)
