"""Deterministic rule-based reference implementations of the NLP adapters:
sentence splitting, tokenization, POS tagging, and entity detection.

These target hermetic fixture suites, not general-text accuracy; stronger
statistical models can be plugged in behind the same call signatures.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional

from .normalizer import (
    DECIMAL_DE_RE,
    DECIMAL_EN_RE,
    NUMBER_GLUE_SYMBOLS,
    TIME_RE,
    date_pattern,
)
from .tokens import NUMBER, PUNCTUATION, SYMBOL, WORD, Token

SENTENCE_ABBREVIATIONS = {
    "en": {
        "Dr.", "Mr.", "Mrs.", "Ms.", "Prof.", "St.", "Jr.", "Sr.", "No.",
        "vs.", "etc.", "e.g.", "i.e.", "approx.",
    },
    "de": {
        "Dr.", "Prof.", "Hr.", "Fr.", "Nr.", "St.", "z.B.", "d.h.", "u.a.",
        "bzw.", "usw.", "ca.", "evtl.", "ggf.", "inkl.", "geb.", "sog.",
    },
    "fr": {"M.", "Mme.", "Dr.", "etc."},
    "es": {"Sr.", "Sra.", "Dr.", "Dra.", "etc."},
}

_SENTENCE_END = re.compile(r"[.!?]+")
_WORD_RE = re.compile(r"[^\W\d_]+(?:[-'’][^\W\d_]+)*")
_INT_RE = re.compile(r"\d+")

SYMBOL_CHARS = frozenset("€$£¥%§°&@#+=~^|<>*µ©®™")


def split_sentences(text: str, language: str) -> list[str]:
    """Split at ./!/? followed by whitespace and an uppercase letter.

    Splits are suppressed after known abbreviations ("Dr.", "z.B.") and,
    for German, after short day/ordinal numbers ("24. Dezember"). The
    returned sentences tile the input up to surrounding whitespace.
    """
    if not text.strip():
        return []
    abbreviations = SENTENCE_ABBREVIATIONS.get(language, set())
    boundaries: list[int] = []
    for match in _SENTENCE_END.finditer(text):
        end = match.end()
        follow = text[end:]
        if not follow.strip():
            continue
        stripped = follow.lstrip()
        if len(stripped) == len(follow):  # no whitespace after the mark
            continue
        if not stripped[0].isupper():
            continue
        preceding = text[: end].rstrip()
        last_word = preceding.split()[-1] if preceding.split() else ""
        if last_word in abbreviations:
            continue
        bare = last_word.rstrip(".!?")
        if language == "de" and _INT_RE.fullmatch(bare) and len(bare) <= 2:
            continue
        boundaries.append(end)
    sentences: list[str] = []
    start = 0
    for boundary in boundaries:
        chunk = text[start:boundary].strip()
        if chunk:
            sentences.append(chunk)
        start = boundary
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _numeric_patterns(language: str) -> list[re.Pattern[str]]:
    decimal = DECIMAL_DE_RE if language == "de" else DECIMAL_EN_RE
    return [TIME_RE, date_pattern(language), decimal]


def tokenize(sentence: str, language: str) -> list[Token]:
    """Lossless tokenization: token spans tile every non-whitespace
    code point of the sentence exactly once.

    Number tokens follow the normalizer patterns (times, dates, locale
    decimals, German trailing-period ordinals) and absorb directly
    attached currency/percent style symbols; words keep internal hyphens
    and apostrophes; remaining characters become single-character symbol
    or punctuation tokens.
    """
    patterns = _numeric_patterns(language)
    tokens: list[Token] = []
    i = 0
    n = len(sentence)
    while i < n:
        ch = sentence[i]
        if ch.isspace():
            i += 1
            continue
        matched = None
        for pattern in patterns:
            m = pattern.match(sentence, i)
            if m and (matched is None or m.end() > matched.end()):
                matched = m
        if matched is None and ch.isdigit():
            m = _INT_RE.match(sentence, i)
            assert m is not None
            end = m.end()
            # German ordinal: integer + "." followed by a word.
            if (
                language == "de"
                and end < n
                and sentence[end] == "."
                and re.match(r"\.\s+[^\W\d_]", sentence[end:])
            ):
                matched = re.compile(r"\d+\.").match(sentence, i)
            else:
                matched = m
        if matched is not None:
            tokens.append(Token(matched.group(), (i, matched.end()), NUMBER))
            i = matched.end()
            continue
        word = _WORD_RE.match(sentence, i)
        if word:
            tokens.append(Token(word.group(), (i, word.end()), WORD))
            i = word.end()
            continue
        kind = SYMBOL if ch in SYMBOL_CHARS else PUNCTUATION
        tokens.append(Token(ch, (i, i + 1), kind))
        i += 1
    return _merge_number_symbols(tokens)


def _merge_number_symbols(tokens: list[Token]) -> list[Token]:
    merged: list[Token] = []
    for token in tokens:
        if merged:
            prev = merged[-1]
            touching = prev.span[1] == token.span[0]
            if touching and prev.kind == NUMBER and token.kind == SYMBOL \
                    and token.surface in NUMBER_GLUE_SYMBOLS:
                merged[-1] = Token(prev.surface + token.surface,
                                   (prev.span[0], token.span[1]), NUMBER)
                continue
            if touching and prev.kind == SYMBOL and token.kind == NUMBER \
                    and prev.surface in NUMBER_GLUE_SYMBOLS:
                merged[-1] = Token(prev.surface + token.surface,
                                   (prev.span[0], token.span[1]), NUMBER)
                continue
        merged.append(token)
    return merged


# ---------------------------------------------------------------------------
# POS tagging

_EN_PRONOUNS = {"i", "he", "she", "it", "we", "you", "they"}
_EN_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those",
    "my", "your", "his", "her", "its", "our", "their",
}
_EN_INFINITIVE_CUES = {
    "to", "will", "would", "can", "could", "shall", "should",
    "may", "might", "must", "do", "does", "did",
}
_EN_PERFECT_CUES = {"has", "have", "had"}
_EN_FUNCTION = _EN_PRONOUNS | _EN_DETERMINERS | _EN_INFINITIVE_CUES | _EN_PERFECT_CUES | {
    "and", "or", "but", "not", "of", "in", "on", "at", "for", "with", "by",
    "from", "as", "is", "are", "was", "were", "be", "been", "am", "if",
    "into", "about", "than", "then", "there", "here", "so", "no", "yes",
}
_EN_ADVERB_CUES = {"yesterday", "today", "tomorrow", "now", "soon", "often", "never", "again"}
_EN_PAST_CUES = {"yesterday", "ago", "last", "earlier", "previously"}

_DE_FUNCTION = {
    "der", "die", "das", "den", "dem", "des", "ein", "eine", "einen",
    "einem", "einer", "eines", "ich", "du", "er", "sie", "es", "wir",
    "ihr", "mich", "mir", "dich", "dir", "uns", "euch", "und", "oder",
    "aber", "nicht", "kein", "keine", "in", "im", "an", "am", "auf",
    "mit", "von", "vom", "zu", "zum", "zur", "bei", "beim", "nach",
    "für", "aus", "um", "über", "unter", "vor", "hinter", "ist", "sind",
    "war", "waren", "hat", "haben", "hatte", "hatten", "wird", "werden",
    "als", "wie", "dass", "weil", "wenn", "dann", "auch", "noch", "schon",
    "sehr", "man", "mein", "dein", "sein", "ihre", "ihren", "diese",
    "dieser", "dieses", "jetzt", "hier", "dort", "so", "ja", "nein",
}
_DE_PRONOUNS = {"ich", "du", "er", "sie", "es", "wir", "ihr", "man"}


def pos_tag(tokens: list[Token], language: str) -> list[Token]:
    """Fill ``pos`` on every word token (OTHER when no rule applies).

    Reference ruleset: closed-class word table, determiner-noun and
    auxiliary-verb bigram rules, pronoun-verb rule with a sentence-level
    past-tense cue, then suffix heuristics.
    """
    if language == "de":
        return _pos_tag_de(tokens)
    words = [t for t in tokens if t.kind == WORD]
    lowered = [t.surface.lower() for t in words]
    past_context = any(w in _EN_PAST_CUES for w in lowered)
    for index, token in enumerate(words):
        lw = lowered[index]
        prev = lowered[index - 1] if index else None
        if lw in _EN_ADVERB_CUES:
            token.pos = "ADV"
        elif lw in _EN_FUNCTION:
            token.pos = "OTHER"
        elif prev in _EN_DETERMINERS and not lw.endswith("ly"):
            token.pos = "NOUN"
        elif prev in _EN_INFINITIVE_CUES:
            token.pos = "VB"
        elif prev in _EN_PERFECT_CUES:
            token.pos = "VBD"
        elif prev in _EN_PRONOUNS:
            token.pos = "VBD" if past_context else "VERB"
        elif lw.endswith("ly"):
            token.pos = "ADV"
        elif lw.endswith("ed"):
            token.pos = "VBD"
        elif lw.endswith("ing"):
            token.pos = "VERB"
        elif lw.endswith(("tion", "ment", "ness", "ity")):
            token.pos = "NOUN"
        elif lw.endswith(("ous", "ful", "ive", "able")):
            token.pos = "ADJ"
        else:
            token.pos = "OTHER"
    return tokens


def _pos_tag_de(tokens: list[Token]) -> list[Token]:
    words = [t for t in tokens if t.kind == WORD]
    for index, token in enumerate(words):
        lw = token.surface.lower()
        prev = words[index - 1].surface.lower() if index else None
        if lw in _DE_FUNCTION:
            token.pos = "OTHER"
        elif index > 0 and token.surface[:1].isupper():
            # German nouns are capitalized; mid-sentence uppercase is a noun.
            token.pos = "NOUN"
        elif prev in _DE_PRONOUNS and lw.endswith(("e", "t", "en", "st")):
            token.pos = "VERB"
        elif lw.endswith(("lich", "isch", "ig", "sam", "bar")):
            token.pos = "ADJ"
        else:
            token.pos = "OTHER"
    return tokens


# ---------------------------------------------------------------------------
# Entity detection

PERSON = "person"
ORG = "org"
LOCATION = "location"
MISC = "misc"

Gazetteer = dict[str, Optional[str]]


def load_gazetteer(path: str | Path) -> Gazetteer:
    """Read ``names.<lang>.txt``: one name per line, optionally followed by
    a tab and the name's language of origin."""
    table: Gazetteer = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, origin = line.partition("\t")
        table[name.strip()] = origin.strip() or None
    return table


def _is_all_caps(surface: str) -> bool:
    return len(surface) >= 2 and surface.isalpha() and surface.isupper()


def detect_entities(
    tokens: list[Token],
    language: str,
    gazetteer: Optional[Gazetteer] = None,
) -> list[Token]:
    """Fill ``entity`` (and origin ``language`` when the gazetteer knows it)
    on name-like token groups.

    A word token is name-like when it is a gazetteer key, is written in
    all caps, or (outside German, whose nouns are always capitalized) is a
    capitalized non-function word that does not open the sentence.
    Consecutive name-like tokens form one span sharing a single label:
    org for all-caps spans, person for gazetteer spans, misc otherwise.
    """
    gazetteer = gazetteer or {}
    words = [t for t in tokens if t.kind == WORD]
    flags: list[bool] = []
    for index, token in enumerate(words):
        surface = token.surface
        if token.normalized:
            flags.append(False)
            continue
        if surface in gazetteer or _is_all_caps(surface):
            flags.append(True)
            continue
        if language != "de" and index > 0 and surface[:1].isupper() \
                and surface.lower() not in _EN_FUNCTION and len(surface) > 1:
            flags.append(True)
            continue
        flags.append(False)
    index = 0
    while index < len(words):
        if not flags[index]:
            index += 1
            continue
        end = index
        while end + 1 < len(words) and flags[end + 1] \
                and words[end + 1].span[0] - words[end].span[1] <= 1:
            end += 1
        span = words[index : end + 1]
        if all(_is_all_caps(t.surface) for t in span):
            label = ORG
        elif any(t.surface in gazetteer for t in span):
            label = PERSON
        else:
            label = MISC
        origin = next(
            (gazetteer[t.surface] for t in span if gazetteer.get(t.surface)),
            None,
        )
        for token in span:
            token.entity = label
            if origin and token.language is None:
                token.language = origin
        index = end + 1
    return tokens
