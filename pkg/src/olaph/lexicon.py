"""Pronunciation lexica: per-language grapheme-to-IPA tables plus the
auxiliary abbreviation, symbol, and character-spelling tables.

File formats (UTF-8, tab-separated, ``#`` lines ignored):

* ``lex.<lang>.tsv``   -- ``grapheme <TAB> ipa <TAB> pos-or-dash <TAB> rank``
* ``abbr.<lang>.tsv``  -- ``SURFACE <TAB> ipa``
* ``sym.<lang>.tsv``   -- ``symbol <TAB> spoken words``
* ``chars.<lang>.tsv`` -- ``char <TAB> ipa``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import LexiconError

POS_TAGS = frozenset({"NOUN", "VERB", "VB", "VBD", "ADJ", "ADV", "OTHER"})


@dataclass(frozen=True)
class LexiconEntry:
    """One grapheme-to-phonemes mapping.

    ``rank`` orders pronunciation variants of the same surface form;
    rank 0 is the preferred variant.
    """

    grapheme: str
    phonemes: str
    pos: Optional[str] = None
    rank: int = 0

    def __post_init__(self) -> None:
        if not self.grapheme:
            raise LexiconError("entry grapheme must be non-empty")
        if not self.phonemes:
            raise LexiconError(f"entry for {self.grapheme!r} has empty phonemes")
        if self.rank < 0:
            raise LexiconError(f"entry for {self.grapheme!r} has negative rank")


def _entry_sort_key(entry: LexiconEntry) -> tuple:
    # POS-tagged variants first, then by rank, then by tag for determinism.
    return (entry.pos is None, entry.rank, entry.pos or "", entry.grapheme)


class Lexicon:
    """Immutable multimap from surface forms to pronunciation variants.

    Lookup is exact-case first, case-folded second, so distinct entries for
    e.g. a proper noun and its lowercase homograph can coexist.
    """

    def __init__(self, language: str, entries: Iterable[LexiconEntry] = ()) -> None:
        self.language = language
        self._exact: dict[str, list[LexiconEntry]] = {}
        self._folded: dict[str, list[LexiconEntry]] = {}
        seen: set[tuple[str, Optional[str], int]] = set()
        for entry in entries:
            key = (entry.grapheme, entry.pos, entry.rank)
            if key in seen:
                raise LexiconError(
                    f"duplicate entry ({entry.grapheme!r}, {entry.pos}, {entry.rank})"
                )
            seen.add(key)
            self._exact.setdefault(entry.grapheme, []).append(entry)
            self._folded.setdefault(entry.grapheme.casefold(), []).append(entry)
        for bucket in self._exact.values():
            bucket.sort(key=_entry_sort_key)
        for bucket in self._folded.values():
            bucket.sort(key=_entry_sort_key)

    def __len__(self) -> int:
        return sum(len(b) for b in self._exact.values())

    def __iter__(self) -> Iterator[str]:
        return iter(self._exact)

    def __contains__(self, word: str) -> bool:
        return word in self._exact or word.casefold() in self._folded

    def entries_for(self, word: str) -> list[LexiconEntry]:
        """All variants matching ``word``: exact-case bucket if it exists,
        otherwise the case-folded bucket."""
        exact = self._exact.get(word)
        if exact:
            return exact
        return self._folded.get(word.casefold(), [])


def lookup(lex: Lexicon, word: str, pos: Optional[str] = None) -> Optional[str]:
    """Resolve ``word`` to a phoneme string, or None when no key matches.

    Among matching variants, a variant whose POS tag equals ``pos`` wins;
    otherwise the lowest-rank untagged variant; otherwise the lowest-rank
    variant overall.
    """
    if not word:
        raise ValueError("lookup requires a non-empty word")
    entries = lex.entries_for(word)
    if not entries:
        return None
    if pos is not None:
        tagged = [e for e in entries if e.pos == pos]
        if tagged:
            return min(tagged, key=_entry_sort_key).phonemes
    untagged = [e for e in entries if e.pos is None]
    if untagged:
        return min(untagged, key=lambda e: (e.rank, e.grapheme)).phonemes
    return min(entries, key=lambda e: (e.rank, e.pos or "", e.grapheme)).phonemes


@dataclass
class AuxLexica:
    """Abbreviation, symbol, and character-spelling tables for one language.

    Abbreviation keys are stored uppercase; queries are uppercased as well.
    """

    language: str
    abbreviations: dict[str, str] = field(default_factory=dict)
    symbols: dict[str, str] = field(default_factory=dict)
    char_map: dict[str, str] = field(default_factory=dict)


def lookup_abbreviation(aux: AuxLexica, word: str, language: str) -> Optional[str]:
    """Phonemes for an abbreviation, matched on the uppercased surface."""
    return aux.abbreviations.get(word.upper())


def expand_symbol(aux: AuxLexica, symbol: str, language: str) -> Optional[str]:
    """Spoken word(s) for a symbol character, or None when unmapped."""
    return aux.symbols.get(symbol)


def spell_out(aux: AuxLexica, word: str, language: str) -> str:
    """Letter-by-letter pronunciation from the character map, space-joined.

    Raises LexiconError naming the first character without a mapping.
    """
    parts: list[str] = []
    for ch in word:
        phon = aux.char_map.get(ch)
        if phon is None:
            phon = aux.char_map.get(ch.lower())
        if phon is None:
            raise LexiconError(f"no character mapping for {ch!r} in {language}")
        parts.append(phon)
    return " ".join(parts)


def _data_rows(path: Path) -> Iterator[tuple[int, list[str]]]:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise LexiconError(f"lexicon file not found: {path}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        yield lineno, raw.split("\t")


def load_lexicon(path: str | Path, language: str) -> Lexicon:
    """Load a 4-column pronunciation lexicon, rejecting malformed rows and
    duplicate (grapheme, pos, rank) triples with the offending line number."""
    path = Path(path)
    entries: list[LexiconEntry] = []
    seen: dict[tuple[str, Optional[str], int], int] = {}
    for lineno, cols in _data_rows(path):
        if len(cols) != 4:
            raise LexiconError(f"{path.name}:{lineno}: expected 4 columns, got {len(cols)}")
        grapheme, phonemes, pos_col, rank_col = (c.strip() for c in cols)
        if not grapheme or not phonemes:
            raise LexiconError(f"{path.name}:{lineno}: empty grapheme or phonemes")
        pos = None if pos_col in ("-", "") else pos_col
        try:
            rank = int(rank_col)
        except ValueError:
            raise LexiconError(f"{path.name}:{lineno}: rank {rank_col!r} is not an integer") from None
        if rank < 0:
            raise LexiconError(f"{path.name}:{lineno}: rank must be non-negative")
        key = (grapheme, pos, rank)
        if key in seen:
            raise LexiconError(
                f"{path.name}:{lineno}: duplicate of line {seen[key]} ({grapheme!r}, {pos}, {rank})"
            )
        seen[key] = lineno
        entries.append(LexiconEntry(grapheme, phonemes, pos, rank))
    return Lexicon(language, entries)


def _load_two_column(path: Path, upper_keys: bool = False) -> dict[str, str]:
    table: dict[str, str] = {}
    for lineno, cols in _data_rows(path):
        if len(cols) != 2:
            raise LexiconError(f"{path.name}:{lineno}: expected 2 columns, got {len(cols)}")
        key, value = cols[0].strip(), cols[1].strip()
        if not key or not value:
            raise LexiconError(f"{path.name}:{lineno}: empty key or value")
        table[key.upper() if upper_keys else key] = value
    return table


def load_aux_lexica(data_dir: str | Path, language: str) -> AuxLexica:
    """Load the abbreviation/symbol/character tables for one language.

    Missing files yield empty tables; malformed rows raise LexiconError.
    """
    data_dir = Path(data_dir)
    aux = AuxLexica(language)
    abbr = data_dir / f"abbr.{language}.tsv"
    if abbr.exists():
        aux.abbreviations = _load_two_column(abbr, upper_keys=True)
    sym = data_dir / f"sym.{language}.tsv"
    if sym.exists():
        aux.symbols = _load_two_column(sym)
    chars = data_dir / f"chars.{language}.tsv"
    if chars.exists():
        aux.char_map = _load_two_column(chars)
    return aux
