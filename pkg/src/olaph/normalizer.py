"""Spoken-form normalization of numbers, dates, times, decimals, ordinals,
and symbols for English and German.

English cardinals follow the conventional long-form wording ("one hundred
and five", hyphenated tens like "forty-two") without group commas. German
numbers are written as single compound words with the unit-before-ten rule
("einundzwanzig"); ordinals default to the nominative -te/-ste form, with
the inflection suffix configurable for constructs such as dates, which
read the day with the strong -er ending ("vierundzwanzigster Dezember").

Classifier patterns are fixed:
time ``\\d{1,2}:\\d{2}``; German date ``\\d{1,2}.\\d{1,2}.\\d{2,4}``;
English date ``\\d{1,2}/\\d{1,2}/\\d{2,4}``; German decimal ``\\d+,\\d+``;
English decimal ``\\d+.\\d+``; German ``\\d+.`` followed by a word is an
ordinal; a bare integer is a cardinal unless a date-like context promotes
a four-digit 1000-2099 value to a year.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NormalizationError
from .lexicon import AuxLexica, expand_symbol
from .tokens import NUMBER, SYMBOL, WORD, Token

CARDINAL = "cardinal"
ORDINAL = "ordinal"
DECIMAL = "decimal"
DATE = "date"
TIME = "time"
YEAR = "year"

MAX_CARDINAL = 10**15

TIME_RE = re.compile(r"\d{1,2}:\d{2}")
DATE_DE_RE = re.compile(r"(\d{1,2})\.(\d{1,2})\.(\d{2,4})")
DATE_EN_RE = re.compile(r"(\d{1,2})/(\d{1,2})/(\d{2,4})")
DECIMAL_DE_RE = re.compile(r"\d+,\d+")
DECIMAL_EN_RE = re.compile(r"\d+\.\d+")
ORDINAL_DE_RE = re.compile(r"\d+\.")
INTEGER_RE = re.compile(r"\d+")

CURRENCY_SYMBOLS = frozenset("€$£¥")
# Symbol characters that attach to adjacent digits inside one token.
NUMBER_GLUE_SYMBOLS = frozenset("€$£¥%§°")


@dataclass(frozen=True)
class NumberToken:
    surface: str
    kind: str
    language: str


def date_pattern(language: str) -> re.Pattern[str]:
    return DATE_DE_RE if language == "de" else DATE_EN_RE


def decimal_pattern(language: str) -> re.Pattern[str]:
    return DECIMAL_DE_RE if language == "de" else DECIMAL_EN_RE


_YEAR_CUES = {
    "en": {"year", "in", "since", "anno"},
    "de": {"jahr", "jahre", "jahres", "im", "seit", "anno"},
}

EN_MONTHS = [
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
]
DE_MONTHS = [
    "Januar", "Februar", "März", "April", "Mai", "Juni", "Juli",
    "August", "September", "Oktober", "November", "Dezember",
]


def _month_names(language: str) -> list[str]:
    return DE_MONTHS if language == "de" else EN_MONTHS


def classify_numeric(
    surface: str,
    language: str,
    context: tuple[Optional[str], Optional[str]] = (None, None),
) -> NumberToken:
    """Classify a digit-bearing surface; ``context`` is the pair of
    neighboring token surfaces. Never errors: the worst case is cardinal."""
    prev_surface, next_surface = context
    if TIME_RE.fullmatch(surface):
        return NumberToken(surface, TIME, language)
    if date_pattern(language).fullmatch(surface):
        return NumberToken(surface, DATE, language)
    if decimal_pattern(language).fullmatch(surface):
        return NumberToken(surface, DECIMAL, language)
    if language == "de" and ORDINAL_DE_RE.fullmatch(surface):
        if next_surface and next_surface[:1].isalpha():
            return NumberToken(surface, ORDINAL, language)
        return NumberToken(surface, CARDINAL, language)
    if INTEGER_RE.fullmatch(surface) and len(surface) == 4:
        value = int(surface)
        if 1000 <= value <= 2099 and _date_like_context(language, prev_surface, next_surface):
            return NumberToken(surface, YEAR, language)
    return NumberToken(surface, CARDINAL, language)


def _date_like_context(language: str, prev_surface: Optional[str], next_surface: Optional[str]) -> bool:
    months = {m.casefold() for m in _month_names(language)}
    cues = _YEAR_CUES.get(language, set())
    if prev_surface and (prev_surface.casefold() in months or prev_surface.casefold() in cues):
        return True
    if next_surface and next_surface.casefold() in months:
        return True
    if prev_surface and date_pattern(language).fullmatch(prev_surface):
        return True
    return False


# ---------------------------------------------------------------------------
# English numbers

_EN_UNITS = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
]
_EN_TENS = {
    20: "twenty", 30: "thirty", 40: "forty", 50: "fifty",
    60: "sixty", 70: "seventy", 80: "eighty", 90: "ninety",
}
_EN_SCALES = [
    (10**15, "quadrillion"),
    (10**12, "trillion"),
    (10**9, "billion"),
    (10**6, "million"),
    (10**3, "thousand"),
]
_EN_ORDINAL_IRREGULAR = {
    "one": "first", "two": "second", "three": "third", "five": "fifth",
    "eight": "eighth", "nine": "ninth", "twelve": "twelfth",
}


def _en_under_100(n: int) -> str:
    if n < 20:
        return _EN_UNITS[n]
    tens, unit = divmod(n, 10)
    word = _EN_TENS[tens * 10]
    return f"{word}-{_EN_UNITS[unit]}" if unit else word


def _en_under_1000(n: int) -> str:
    hundreds, rest = divmod(n, 100)
    if not hundreds:
        return _en_under_100(rest)
    head = f"{_EN_UNITS[hundreds]} hundred"
    return f"{head} and {_en_under_100(rest)}" if rest else head


def _en_cardinal(n: int) -> str:
    if n == 0:
        return "zero"
    parts: list[str] = []
    remaining = n
    for value, name in _EN_SCALES:
        group, remaining = divmod(remaining, value)
        if group:
            parts.append(f"{_en_under_1000(group)} {name}")
    if remaining:
        # The final sub-hundred group attaches with "and" when anything
        # larger precedes it: "one thousand and five".
        if parts and remaining < 100:
            parts.append(f"and {_en_under_100(remaining)}")
        else:
            parts.append(_en_under_1000(remaining))
    return " ".join(parts)


def _en_ordinal(n: int) -> str:
    words = _en_cardinal(n)
    head, sep, last = words.rpartition(" ")
    prefix = head + sep
    if "-" in last:
        tens_part, _, unit_part = last.rpartition("-")
        return f"{prefix}{tens_part}-{_en_ordinalize_word(unit_part)}"
    return prefix + _en_ordinalize_word(last)


def _en_ordinalize_word(word: str) -> str:
    if word in _EN_ORDINAL_IRREGULAR:
        return _EN_ORDINAL_IRREGULAR[word]
    if word.endswith("y"):
        return word[:-1] + "ieth"
    return word + "th"


# ---------------------------------------------------------------------------
# German numbers

_DE_UNITS = [
    "null", "eins", "zwei", "drei", "vier", "fünf", "sechs", "sieben",
    "acht", "neun", "zehn", "elf", "zwölf", "dreizehn", "vierzehn",
    "fünfzehn", "sechzehn", "siebzehn", "achtzehn", "neunzehn",
]
_DE_TENS = {
    20: "zwanzig", 30: "dreißig", 40: "vierzig", 50: "fünfzig",
    60: "sechzig", 70: "siebzig", 80: "achtzig", 90: "neunzig",
}
_DE_SCALES = [
    (10**15, "Billiarde", "Billiarden"),
    (10**12, "Billion", "Billionen"),
    (10**9, "Milliarde", "Milliarden"),
    (10**6, "Million", "Millionen"),
]
# Irregular ordinal stems below twenty; the rest take -t / -st regularly.
_DE_ORDINAL_STEMS = {1: "erst", 3: "dritt", 7: "siebt", 8: "acht"}

DE_ORDINAL_SUFFIXES = frozenset({"e", "er", "en", "es", "em"})


def _de_unit(n: int, final: bool) -> str:
    # "eins" only when the whole number ends here; "ein" inside compounds.
    if n == 1:
        return "eins" if final else "ein"
    return _DE_UNITS[n]


def _de_under_100(n: int, final: bool) -> str:
    if n < 20:
        return _de_unit(n, final)
    tens, unit = divmod(n, 10)
    if unit:
        return f"{_de_unit(unit, False)}und{_DE_TENS[tens * 10]}"
    return _DE_TENS[tens * 10]


def _de_under_1000(n: int, final: bool) -> str:
    hundreds, rest = divmod(n, 100)
    word = ""
    if hundreds:
        word = f"{_de_unit(hundreds, False)}hundert"
    if rest:
        word += _de_under_100(rest, final)
    return word


def _de_under_million(n: int, final: bool) -> str:
    thousands, rest = divmod(n, 1000)
    word = ""
    if thousands:
        word = f"{_de_under_1000(thousands, False)}tausend"
    if rest:
        word += _de_under_1000(rest, final)
    return word


def _de_cardinal(n: int) -> str:
    if n == 0:
        return "null"
    parts: list[str] = []
    remaining = n
    for value, singular, plural in _DE_SCALES:
        group, remaining = divmod(remaining, value)
        if group == 1:
            parts.append(f"eine {singular}")
        elif group:
            parts.append(f"{_de_under_million(group, True)} {plural}")
    if remaining:
        parts.append(_de_under_million(remaining, True))
    return " ".join(parts)


def _de_ordinal(n: int, suffix: str) -> str:
    rest = n % 100
    if 1 <= rest <= 19:
        stem = _DE_ORDINAL_STEMS.get(rest, _de_under_100(rest, False) + "t")
        prefix = _de_under_million(n - rest, False) if n - rest else ""
        return f"{prefix}{stem}{suffix}"
    return f"{_de_under_million(n, True)}st{suffix}"


# ---------------------------------------------------------------------------
# Public operations

def _require_language(language: str) -> None:
    if language not in ("en", "de"):
        raise NormalizationError(f"unsupported normalization language: {language!r}")


def normalize_cardinal(n: int, language: str) -> str:
    """Spoken words for an integer with |n| <= 10^15."""
    _require_language(language)
    if abs(n) > MAX_CARDINAL:
        raise NormalizationError(f"cardinal {n} out of supported range")
    words = _en_cardinal(abs(n)) if language == "en" else _de_cardinal(abs(n))
    return f"minus {words}" if n < 0 else words


def normalize_ordinal(n: int, language: str, case_gender: Optional[str] = None) -> str:
    """Ordinal words; for German, ``case_gender`` selects the inflection
    suffix (one of e/er/en/es/em, default the nominative "e")."""
    _require_language(language)
    if n < 1:
        raise NormalizationError(f"ordinal base must be >= 1, got {n}")
    if n > MAX_CARDINAL:
        raise NormalizationError(f"ordinal {n} out of supported range")
    if language == "en":
        return _en_ordinal(n)
    suffix = case_gender or "e"
    if suffix not in DE_ORDINAL_SUFFIXES:
        raise NormalizationError(f"unknown ordinal inflection {case_gender!r}")
    return _de_ordinal(n, suffix)


def normalize_decimal(surface: str, language: str) -> str:
    """Integer part, separator word, then fraction digits one by one."""
    _require_language(language)
    if not decimal_pattern(language).fullmatch(surface):
        raise NormalizationError(f"not a {language} decimal: {surface!r}")
    separator = "," if language == "de" else "."
    integer_part, fraction = surface.split(separator)
    sep_word = "Komma" if language == "de" else "point"
    digits = " ".join(normalize_cardinal(int(d), language) for d in fraction)
    return f"{normalize_cardinal(int(integer_part), language)} {sep_word} {digits}"


def normalize_date(surface: str, language: str) -> str:
    """German dd.mm.yyyy reads ordinal day + month + year; English
    mm/dd/yyyy reads month + ordinal day + year."""
    _require_language(language)
    match = date_pattern(language).fullmatch(surface)
    if not match:
        raise NormalizationError(f"not a {language} date: {surface!r}")
    if language == "de":
        day, month, year = (int(g) for g in match.groups())
    else:
        month, day, year = (int(g) for g in match.groups())
    if not 1 <= month <= 12:
        raise NormalizationError(f"invalid month in date {surface!r}")
    if not 1 <= day <= 31:
        raise NormalizationError(f"invalid day in date {surface!r}")
    month_name = _month_names(language)[month - 1]
    year_words = normalize_year(year, language)
    if language == "de":
        return f"{normalize_ordinal(day, 'de', 'er')} {month_name} {year_words}"
    return f"{month_name} {normalize_ordinal(day, 'en')} {year_words}"


def normalize_time(surface: str, language: str) -> str:
    """Clock reading: English "twelve thirty" style, German "zwölf Uhr
    dreißig" style."""
    _require_language(language)
    if not TIME_RE.fullmatch(surface):
        raise NormalizationError(f"not a time: {surface!r}")
    hours_part, minutes_part = surface.split(":")
    hours, minutes = int(hours_part), int(minutes_part)
    if hours > 23 or minutes > 59:
        raise NormalizationError(f"invalid time: {surface!r}")
    hour_words = normalize_cardinal(hours, language)
    if language == "de":
        if minutes == 0:
            return f"{hour_words} Uhr"
        return f"{hour_words} Uhr {normalize_cardinal(minutes, 'de')}"
    if minutes == 0:
        return f"{hour_words} o'clock"
    if minutes < 10:
        return f"{hour_words} oh {normalize_cardinal(minutes, 'en')}"
    return f"{hour_words} {normalize_cardinal(minutes, 'en')}"


def normalize_year(n: int, language: str) -> str:
    """English years 1100-1999 read in pairs ("nineteen eighty-four");
    everything else reads as a cardinal."""
    _require_language(language)
    if language == "en" and 1100 <= n <= 1999:
        high, low = divmod(n, 100)
        if low == 0:
            return f"{_en_under_100(high)} hundred"
        if low < 10:
            return f"{_en_under_100(high)} oh {_EN_UNITS[low]}"
        return f"{_en_under_100(high)} {_en_under_100(low)}"
    return normalize_cardinal(n, language)


def _spell_digit_runs(core: str, language: str) -> list[str]:
    """Last-resort reading: digits one by one, letter runs kept as words."""
    words: list[str] = []
    for run in re.findall(r"\d+|[^\W\d_]+", core):
        if run[0].isdigit():
            words.extend(normalize_cardinal(int(d), language) for d in run)
        else:
            words.append(run)
    return words


def _number_words(core: str, language: str, context: tuple[Optional[str], Optional[str]]) -> list[str]:
    token = classify_numeric(core, language, context)
    if token.kind == TIME:
        return normalize_time(core, language).split(" ")
    if token.kind == DATE:
        return normalize_date(core, language).split(" ")
    if token.kind == DECIMAL:
        return normalize_decimal(core, language).split(" ")
    if token.kind == ORDINAL:
        return normalize_ordinal(int(core.rstrip(".")), language).split(" ")
    if token.kind == YEAR:
        return normalize_year(int(core), language).split(" ")
    digits = core.rstrip(".")
    if INTEGER_RE.fullmatch(digits) and not (digits.startswith("0") and len(digits) > 1):
        value = int(digits)
        if value <= MAX_CARDINAL:
            return normalize_cardinal(value, language).split(" ")
    return _spell_digit_runs(core, language)


def normalize_token(
    token: Token,
    language: str,
    context: tuple[Optional[str], Optional[str]],
    aux: AuxLexica,
) -> list[Token]:
    """Expand a number or symbol token into spoken-word tokens.

    Attached currency symbols are read after the amount ("€5" -> "fünf
    Euro"); other attached symbols keep their surface position. Symbols
    without an expansion produce no output tokens.
    """
    if token.kind not in (NUMBER, SYMBOL):
        raise ValueError(f"cannot normalize token of kind {token.kind}")
    words: list[str] = []
    if token.kind == SYMBOL:
        expansion = expand_symbol(aux, token.surface, language)
        if expansion is not None:
            words.extend(expansion.split(" "))
    else:
        core = token.surface
        leading: list[str] = []
        trailing: list[str] = []
        while core and core[0] in NUMBER_GLUE_SYMBOLS:
            leading.append(core[0])
            core = core[1:]
        while core and core[-1] in NUMBER_GLUE_SYMBOLS:
            trailing.insert(0, core[-1])
            core = core[:-1]
        before = [s for s in leading if s not in CURRENCY_SYMBOLS]
        after = [s for s in leading if s in CURRENCY_SYMBOLS] + trailing
        for symbol in before:
            expansion = expand_symbol(aux, symbol, language)
            if expansion is not None:
                words.extend(expansion.split(" "))
        if core:
            words.extend(_number_words(core, language, context))
        for symbol in after:
            expansion = expand_symbol(aux, symbol, language)
            if expansion is not None:
                words.extend(expansion.split(" "))
    return [
        Token(word, token.span, WORD, language=token.language, normalized=True)
        for word in words
        if word
    ]
