"""The hierarchical phonemization flow.

Every word token walks a resolution ladder and the first level that
produces phonemes wins:

1. abbreviation lexicon (all-caps or capitalized tokens only),
2. the lexicon of an entity's origin language,
3. the primary lexicon, using the token's POS tag,
4. the lexicon picked by per-token language detection,
5. every remaining allowed lexicon in configuration order,
6. compound resolution (hyphen decomposition, else probabilistic split),
7. letter-by-letter spelling from the character map,
8. unresolved (empty phonemes, flagged, never an error).

Numbers and symbols are normalized to spoken words beforehand; those
synthesized tokens skip level 1. Punctuation passes through untouched in
position.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

from .errors import LexiconError, NormalizationError
from .evaluate import strip_verbose
from .lexicon import lookup, lookup_abbreviation, spell_out
from .nlp import detect_entities, pos_tag, split_sentences, tokenize
from .normalizer import normalize_cardinal, normalize_token
from .resources import Resources
from .splitter import ScoreParams, best_split
from .tokens import NUMBER, PUNCTUATION, SYMBOL, WORD, Token

logger = logging.getLogger(__name__)

SOURCE_LEXICON_PRIMARY = "lexicon_primary"
SOURCE_LEXICON_FOREIGN = "lexicon_foreign"
SOURCE_ABBREVIATION = "abbreviation"
SOURCE_NORMALIZED = "normalized"
SOURCE_COMPOUND = "compound"
SOURCE_CHARMAP = "charmap"
SOURCE_UNRESOLVED = "unresolved"

_MIN_CLAUSE_TOKENS = 3


@dataclass(frozen=True)
class PipelineConfig:
    """Immutable pipeline settings; ``allowed_languages`` starts with the
    primary language."""

    primary_language: str
    allowed_languages: tuple[str, ...]
    score_params: ScoreParams = ScoreParams()
    strip_verbose: bool = False
    auto_detect_text_language: bool = False
    detect_threshold: float = 0.35

    def __post_init__(self) -> None:
        if not self.allowed_languages:
            raise ValueError("allowed_languages must be non-empty")
        if self.allowed_languages[0] != self.primary_language:
            raise ValueError("primary_language must come first in allowed_languages")


@dataclass(frozen=True)
class PhonemizedWord:
    surface: str
    phonemes: str
    source: str
    language_used: str


@dataclass(frozen=True)
class Punctuation:
    surface: str


SentenceItem = Union[PhonemizedWord, Punctuation]


@dataclass
class SentenceResult:
    text: str
    items: list[SentenceItem] = field(default_factory=list)

    def words(self) -> list[PhonemizedWord]:
        return [item for item in self.items if isinstance(item, PhonemizedWord)]


def _check_resources(config: PipelineConfig, resources: Resources) -> None:
    for code in config.allowed_languages:
        if code not in resources.lexica:
            raise LexiconError(f"no lexicon loaded for allowed language {code!r}")
        if code not in resources.stats:
            raise LexiconError(f"no statistics loaded for allowed language {code!r}")


def _lookup_word(resources: Resources, code: str, word: str,
                 pos: Optional[str]) -> Optional[str]:
    lex = resources.lexica.get(code)
    if lex is None:
        return None
    return lookup(lex, word, pos)


def _lookup_hyphen_parts(resources: Resources, config: PipelineConfig,
                         word: str, pos: Optional[str]) -> Optional[tuple[str, str]]:
    """Resolve a hyphenated word part by part through the lexicon levels;
    all parts must resolve. Returns (phonemes, language) or None."""
    parts = [p for p in word.split("-") if p]
    if len(parts) < 2:
        return None
    rendered: list[str] = []
    languages: set[str] = set()
    for part in parts:
        found = None
        for code in config.allowed_languages:
            phonemes = _lookup_word(resources, code, part, pos)
            if phonemes is not None:
                found = (phonemes, code)
                break
        if found is None:
            return None
        rendered.append(found[0])
        languages.add(found[1])
    language = languages.pop() if len(languages) == 1 else config.primary_language
    return " ".join(rendered), language


def phonemize_word(
    token: Token,
    config: PipelineConfig,
    resources: Resources,
    max_level: int = 8,
) -> PhonemizedWord:
    """Resolve one word token through the ladder; never raises, the
    failure case is source="unresolved". ``max_level`` truncates the
    ladder (testing hook)."""
    word = token.surface
    primary = config.primary_language

    # (1) abbreviation lexicon for all-caps/capitalized surfaces
    if max_level >= 1 and not token.normalized and word[:1].isupper():
        aux = resources.aux.get(primary)
        if aux is not None:
            phonemes = lookup_abbreviation(aux, word, primary)
            if phonemes is not None:
                return PhonemizedWord(word, phonemes, SOURCE_ABBREVIATION, primary)

    # (2) entity origin language
    if max_level >= 2 and token.entity is not None and token.language is not None:
        phonemes = _lookup_word(resources, token.language, word, token.pos)
        if phonemes is not None:
            source = (
                SOURCE_LEXICON_PRIMARY
                if token.language == primary
                else SOURCE_LEXICON_FOREIGN
            )
            return PhonemizedWord(word, phonemes, source, token.language)

    # (2b) clause-level detected language (non-entity tokens)
    if max_level >= 2 and token.entity is None and token.language is not None \
            and token.language != primary:
        phonemes = _lookup_word(resources, token.language, word, token.pos)
        if phonemes is not None:
            return PhonemizedWord(word, phonemes, SOURCE_LEXICON_FOREIGN, token.language)

    # (3) primary lexicon with POS
    if max_level >= 3:
        phonemes = _lookup_word(resources, primary, word, token.pos)
        if phonemes is not None:
            return PhonemizedWord(word, phonemes, SOURCE_LEXICON_PRIMARY, primary)

    # (4) per-token language detection
    detected: Optional[str] = None
    if max_level >= 4 and len(config.allowed_languages) > 1:
        guess = resources.detect(word, config.allowed_languages, config.detect_threshold)
        if not guess.fallback and guess.language != primary:
            detected = guess.language
            phonemes = _lookup_word(resources, detected, word, token.pos)
            if phonemes is not None:
                return PhonemizedWord(word, phonemes, SOURCE_LEXICON_FOREIGN, detected)

    # (5) global lookup over the remaining allowed lexica
    if max_level >= 5:
        for code in config.allowed_languages[1:]:
            if code == detected:
                continue
            phonemes = _lookup_word(resources, code, word, token.pos)
            if phonemes is not None:
                return PhonemizedWord(word, phonemes, SOURCE_LEXICON_FOREIGN, code)

    # (6) compound resolution
    if max_level >= 6:
        if "-" in word:
            resolved = _lookup_hyphen_parts(resources, config, word, token.pos)
            if resolved is not None:
                phonemes, language = resolved
                return PhonemizedWord(word, phonemes, SOURCE_COMPOUND, language)
        else:
            lexica = [resources.lexica[c] for c in config.allowed_languages]
            detector = (
                (lambda text, allowed: resources.detect(text, list(allowed)))
                if resources.profiles
                else None
            )
            try:
                segmentation = best_split(
                    word, lexica, resources.stats[primary],
                    config.score_params, detector,
                )
            except ValueError:
                segmentation = None
            if segmentation is not None and len(segmentation.subwords) > 1:
                phonemes = "".join(s.phonemes for s in segmentation.subwords)
                return PhonemizedWord(word, phonemes, SOURCE_COMPOUND, primary)

    # (7) character-map spelling
    if max_level >= 7:
        aux = resources.aux.get(primary)
        if aux is not None and aux.char_map:
            try:
                spelled = spell_out(aux, word, primary)
            except LexiconError:
                spelled = None
            if spelled:
                return PhonemizedWord(word, spelled, SOURCE_CHARMAP, primary)

    # (8) unresolved
    return PhonemizedWord(word, "", SOURCE_UNRESOLVED, primary)


def _detect_entity_spans(tokens: list[Token], config: PipelineConfig,
                         resources: Resources) -> None:
    """One language detection per entity span lacking a gazetteer origin."""
    span: list[Token] = []
    for token in tokens + [Token("", (0, 0), PUNCTUATION)]:
        if token.kind == WORD and token.entity is not None:
            span.append(token)
            continue
        if span:
            if all(t.language is None for t in span):
                text = " ".join(t.surface for t in span)
                guess = resources.detect(text, config.allowed_languages,
                                         config.detect_threshold)
                if not guess.fallback:
                    for t in span:
                        t.language = guess.language
            span = []


def _detect_clauses(tokens: list[Token], config: PipelineConfig,
                    resources: Resources) -> None:
    """Mark foreign-language clauses: contiguous runs of >= 3 plain word
    tokens that detection confidently places in a non-primary language."""
    run: list[Token] = []
    for token in tokens + [Token("", (0, 0), PUNCTUATION)]:
        if token.kind == WORD and token.entity is None and not token.normalized:
            run.append(token)
            continue
        if len(run) >= _MIN_CLAUSE_TOKENS:
            text = " ".join(t.surface for t in run)
            guess = resources.detect(text, config.allowed_languages,
                                     config.detect_threshold)
            if not guess.fallback and guess.language != config.primary_language:
                for t in run:
                    if t.language is None:
                        t.language = guess.language
        run = []


def _fallback_number_tokens(token: Token, language: str) -> list[Token]:
    """Digit-by-digit reading for numbers the normalizer rejected."""
    words: list[str] = []
    for ch in token.surface:
        if ch.isdigit():
            words.append(normalize_cardinal(int(ch), language))
        elif ch.isalpha():
            words.append(ch)
    return [Token(w, token.span, WORD, normalized=True) for w in words]


def phonemize_sentence(
    sentence: str,
    config: PipelineConfig,
    resources: Resources,
) -> list[SentenceItem]:
    """Tokenize, tag, detect entities, normalize, then phonemize word by
    word; punctuation passes through unchanged in position."""
    primary = config.primary_language
    tokens = tokenize(sentence, primary)
    pos_tag(tokens, primary)
    detect_entities(tokens, primary, resources.gazetteers.get(primary))
    if resources.profiles:
        _detect_entity_spans(tokens, config, resources)
        _detect_clauses(tokens, config, resources)

    neighbors = [t for t in tokens if t.kind in (WORD, NUMBER)]
    positions = {id(t): i for i, t in enumerate(neighbors)}

    expanded: list[Token] = []
    for token in tokens:
        if token.kind == NUMBER:
            index = positions[id(token)]
            context = (
                neighbors[index - 1].surface if index > 0 else None,
                neighbors[index + 1].surface if index + 1 < len(neighbors) else None,
            )
            try:
                expanded.extend(
                    normalize_token(token, primary, context, resources.aux[primary])
                )
            except NormalizationError:
                expanded.extend(_fallback_number_tokens(token, primary))
        elif token.kind == SYMBOL:
            try:
                replacement = normalize_token(
                    token, primary, (None, None), resources.aux[primary]
                )
            except NormalizationError:
                replacement = []
            if replacement:
                expanded.extend(replacement)
            else:
                expanded.append(token)
        else:
            expanded.append(token)

    items: list[SentenceItem] = []
    for token in expanded:
        if token.kind == WORD:
            word = phonemize_word(token, config, resources)
            if token.normalized and word.source != SOURCE_UNRESOLVED:
                word = replace(word, source=SOURCE_NORMALIZED)
            items.append(word)
        else:
            items.append(Punctuation(token.surface))
    return items


def phonemize_text(
    text: str,
    config: PipelineConfig,
    resources: Resources,
) -> list[SentenceResult]:
    """Phonemize whole texts sentence by sentence.

    With ``auto_detect_text_language`` the primary language is re-picked
    from whole-text detection among the allowed languages before
    processing. With ``strip_verbose`` every phoneme string is stripped of
    stress/length/syllable marks.
    """
    _check_resources(config, resources)
    effective = config
    if config.auto_detect_text_language and resources.profiles:
        guess = resources.detect(text, config.allowed_languages, config.detect_threshold)
        if not guess.fallback and guess.language != config.primary_language:
            reordered = (guess.language,) + tuple(
                c for c in config.allowed_languages if c != guess.language
            )
            effective = replace(
                config,
                primary_language=guess.language,
                allowed_languages=reordered,
            )
    results: list[SentenceResult] = []
    for sentence in split_sentences(text, effective.primary_language):
        items = phonemize_sentence(sentence, effective, resources)
        if effective.strip_verbose:
            items = [
                replace(item, phonemes=strip_verbose(item.phonemes))
                if isinstance(item, PhonemizedWord)
                else item
                for item in items
            ]
        results.append(SentenceResult(sentence, items))
    return results


def render_plain(items: Sequence[SentenceItem]) -> str:
    """Phonemes joined by spaces with punctuation attached inline."""
    out: list[str] = []
    for item in items:
        if isinstance(item, Punctuation):
            if out:
                out[-1] += item.surface
            else:
                out.append(item.surface)
        else:
            out.append(item.phonemes)
    return " ".join(part for part in out if part)


def sentence_to_record(result: SentenceResult) -> dict:
    """JSON-ready mapping for one sentence."""
    words = []
    for item in result.items:
        if isinstance(item, Punctuation):
            words.append(
                {"surface": item.surface, "phonemes": item.surface,
                 "source": "punctuation", "lang": ""}
            )
        else:
            words.append(
                {"surface": item.surface, "phonemes": item.phonemes,
                 "source": item.source, "lang": item.language_used}
            )
    return {"text": result.text, "words": words}
