"""Independent oracles used to freeze expected values.

These deliberately share no code with the package: segmentation is checked
by brute force over all split-point subsets, and number words are parsed
back to integers with separate word tables.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

# ---------------------------------------------------------------------------
# Brute-force segmentation

def brute_force_covers(word: str, candidates: set[str]) -> list[tuple[tuple[int, ...], list[str]]]:
    """Every exact cover of ``word`` by candidate pieces, found by trying
    all 2^(len-1) split-point subsets; sorted by split positions."""
    n = len(word)
    covers: list[tuple[tuple[int, ...], list[str]]] = []
    for mask in range(1 << max(n - 1, 0)):
        cuts = [i + 1 for i in range(n - 1) if (mask >> i) & 1]
        pieces: list[str] = []
        previous = 0
        valid = True
        for cut in cuts + [n]:
            piece = word[previous:cut]
            if piece.casefold() not in candidates:
                valid = False
                break
            pieces.append(piece)
            previous = cut
        if valid and pieces:
            covers.append((tuple(cuts), pieces))
    covers.sort(key=lambda item: item[0])
    return covers


def oracle_probability(piece: str, counts: Mapping[str, int], total: int,
                       floor: float) -> float:
    count = counts.get(piece.casefold(), 0)
    return count / total if count else floor


def oracle_score(pieces: Sequence[str], word_length: int,
                 counts: Mapping[str, int], total: int, floor: float,
                 alpha: float, beta: float) -> float:
    acc = 0.0
    for piece in pieces:
        if len(piece) == 1:
            penalty = 0.1
        elif len(piece) == 2:
            penalty = 0.5
        else:
            penalty = 1.0
        acc += (
            oracle_probability(piece, counts, total, floor)
            * (len(piece) / word_length) ** alpha
            * penalty
        )
    return acc * len(pieces) ** -beta


def oracle_best_split(
    word: str,
    candidates: set[str],
    counts: Mapping[str, int],
    total: int,
    floor: float,
    alpha: float,
    beta: float,
    max_subwords: int = 8,
) -> Optional[tuple[list[str], float]]:
    """Argmax over brute-force covers with the fewer-pieces-then-earlier
    tie-break; None when no cover exists."""
    best: Optional[tuple[list[str], float]] = None
    best_key = None
    index = 0
    for _cuts, pieces in brute_force_covers(word, candidates):
        if len(pieces) > max_subwords:
            index += 1
            continue
        score = oracle_score(pieces, len(word), counts, total, floor, alpha, beta)
        key = (-score, len(pieces), index)
        if best_key is None or key < best_key:
            best = (pieces, score)
            best_key = key
        index += 1
    return best


# ---------------------------------------------------------------------------
# English word-to-number

_EN_WORD_VALUES = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11,
    "twelve": 12, "thirteen": 13, "fourteen": 14, "fifteen": 15,
    "sixteen": 16, "seventeen": 17, "eighteen": 18, "nineteen": 19,
    "twenty": 20, "thirty": 30, "forty": 40, "fifty": 50, "sixty": 60,
    "seventy": 70, "eighty": 80, "ninety": 90,
}
_EN_SCALES = {
    "thousand": 10**3, "million": 10**6, "billion": 10**9,
    "trillion": 10**12, "quadrillion": 10**15,
}


def en_words_to_int(words: str) -> int:
    """Parse English cardinal words (with optional "and"s, hyphens, and a
    leading "minus") back to the integer they denote."""
    sign = 1
    total = 0
    current = 0
    for token in words.replace("-", " ").split():
        if token == "minus":
            sign = -1
        elif token == "and":
            continue
        elif token in _EN_WORD_VALUES:
            current += _EN_WORD_VALUES[token]
        elif token == "hundred":
            current *= 100
        elif token in _EN_SCALES:
            total += current * _EN_SCALES[token]
            current = 0
        else:
            raise ValueError(f"unknown English number word {token!r}")
    return sign * (total + current)


# ---------------------------------------------------------------------------
# German word-to-number

_DE_SMALL = {
    "null": 0, "eins": 1, "ein": 1, "zwei": 2, "drei": 3, "vier": 4,
    "fünf": 5, "sechs": 6, "sieben": 7, "acht": 8, "neun": 9, "zehn": 10,
    "elf": 11, "zwölf": 12, "dreizehn": 13, "vierzehn": 14, "fünfzehn": 15,
    "sechzehn": 16, "siebzehn": 17, "achtzehn": 18, "neunzehn": 19,
}
_DE_TENS = {
    "zwanzig": 20, "dreißig": 30, "vierzig": 40, "fünfzig": 50,
    "sechzig": 60, "siebzig": 70, "achtzig": 80, "neunzig": 90,
}
_DE_SCALES = {
    "billiarde": 10**15, "billiarden": 10**15,
    "billion": 10**12, "billionen": 10**12,
    "milliarde": 10**9, "milliarden": 10**9,
    "million": 10**6, "millionen": 10**6,
}


def _de_tens_value(segment: str) -> int:
    if not segment:
        return 0
    if segment in _DE_SMALL:
        return _DE_SMALL[segment]
    if segment in _DE_TENS:
        return _DE_TENS[segment]
    for tens_word, tens_value in _DE_TENS.items():
        suffix = "und" + tens_word
        if segment.endswith(suffix):
            unit = segment[: -len(suffix)]
            if unit in _DE_SMALL and _DE_SMALL[unit] < 10:
                return _DE_SMALL[unit] + tens_value
    raise ValueError(f"unknown German number segment {segment!r}")


def _de_hundreds_value(segment: str) -> int:
    if not segment:
        return 0
    head, sep, rest = segment.partition("hundert")
    if sep:
        multiplier = _de_tens_value(head) if head else 1
        return multiplier * 100 + _de_tens_value(rest)
    return _de_tens_value(segment)


def _de_compound_value(segment: str) -> int:
    head, sep, rest = segment.partition("tausend")
    if sep:
        multiplier = _de_hundreds_value(head) if head else 1
        return multiplier * 1000 + _de_hundreds_value(rest)
    return _de_hundreds_value(segment)


def de_words_to_int(words: str) -> int:
    """Parse German cardinal words (compounds plus Million/Milliarde style
    scale words) back to the integer they denote."""
    tokens = words.split(" ")
    sign = 1
    if tokens and tokens[0] == "minus":
        sign = -1
        tokens = tokens[1:]
    total = 0
    i = 0
    while i < len(tokens):
        token = tokens[i].lower()
        if i + 1 < len(tokens) and tokens[i + 1].lower() in _DE_SCALES:
            multiplier = 1 if token in ("eine", "ein") else _de_compound_value(token)
            total += multiplier * _DE_SCALES[tokens[i + 1].lower()]
            i += 2
        else:
            total += _de_compound_value(token)
            i += 1
    return sign * total


# ---------------------------------------------------------------------------
# Toy lexicon for segmentation oracle tests

ORACLE_PIECES = [
    "ba", "be", "bo", "da", "de", "do", "ka", "ke", "ko", "la",
    "le", "lo", "ma", "me", "mo", "na", "ne", "no", "ra", "re",
    "ro", "sa", "se", "so", "ta", "te", "to", "bar", "ber", "dar",
    "kan", "ken", "lan", "len", "man", "men", "nor", "ral", "ren", "sol",
    "tan", "ten", "tor", "bala", "dora", "kane", "lane", "mane", "nore", "sola",
]


def oracle_words(rng, count: int, max_length: int = 13) -> list[str]:
    """Deterministic pseudo-words built from 2-4 toy-lexicon pieces."""
    words: list[str] = []
    while len(words) < count:
        pieces = [rng.choice(ORACLE_PIECES) for _ in range(rng.randint(2, 4))]
        word = "".join(pieces)
        if len(word) <= max_length:
            words.append(word)
    return words
