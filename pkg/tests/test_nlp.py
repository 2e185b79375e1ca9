from __future__ import annotations

import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from olaph.nlp import (
    MISC,
    ORG,
    PERSON,
    detect_entities,
    load_gazetteer,
    pos_tag,
    split_sentences,
    tokenize,
)
from olaph.tokens import NUMBER, PUNCTUATION, SYMBOL, WORD


class TestSplitSentences:
    def test_basic_split(self) -> None:
        assert split_sentences("Hi. Go.", "en") == ["Hi.", "Go."]

    def test_abbreviation_suppression(self) -> None:
        assert split_sentences("Dr. Smith came.", "en") == ["Dr. Smith came."]
        assert split_sentences("Wir sagen z.B. Hallo.", "de") == ["Wir sagen z.B. Hallo."]

    def test_empty(self) -> None:
        assert split_sentences("", "en") == []
        assert split_sentences("   ", "en") == []

    def test_no_split_before_lowercase(self) -> None:
        assert split_sentences("it is 3.5 percent. yes.", "en") == \
            ["it is 3.5 percent. yes."]

    def test_german_day_number_suppression(self) -> None:
        assert split_sentences("Am 24. Dezember feiern wir.", "de") == \
            ["Am 24. Dezember feiern wir."]

    def test_exclamation_and_question(self) -> None:
        assert split_sentences("Stop! Why? Go.", "en") == ["Stop!", "Why?", "Go."]

    def test_losslessness_walk(self) -> None:
        text = "  Hi. Go home!  Dr. Smith came.  "
        sentences = split_sentences(text, "en")
        cursor = 0
        for sentence in sentences:
            position = text.index(sentence, cursor)
            assert text[cursor:position].strip() == ""
            cursor = position + len(sentence)
        assert text[cursor:].strip() == ""


class TestTokenize:
    def test_words_and_punctuation(self) -> None:
        tokens = tokenize("Go home!", "en")
        assert [(t.surface, t.kind) for t in tokens] == [
            ("Go", WORD), ("home", WORD), ("!", PUNCTUATION),
        ]

    def test_locale_decimal_kept_whole(self) -> None:
        tokens = tokenize("3,14 €", "de")
        assert [(t.surface, t.kind) for t in tokens] == [
            ("3,14", NUMBER), ("€", SYMBOL),
        ]

    def test_internal_hyphens_one_token(self) -> None:
        tokens = tokenize("state-of-the-art", "en")
        assert [t.surface for t in tokens] == ["state-of-the-art"]
        assert tokens[0].kind == WORD

    def test_number_glues_attached_symbol(self) -> None:
        tokens = tokenize("It costs 42% now", "en")
        surfaces = {t.surface: t.kind for t in tokens}
        assert surfaces["42%"] == NUMBER

    def test_currency_prefix_glued(self) -> None:
        tokens = tokenize("€5 bitte", "de")
        assert tokens[0].surface == "€5" and tokens[0].kind == NUMBER

    def test_german_ordinal_period_attached_before_word(self) -> None:
        tokens = tokenize("der 3. Mann", "de")
        assert ("3.", NUMBER) in [(t.surface, t.kind) for t in tokens]

    def test_sentence_final_number_period_detached(self) -> None:
        tokens = tokenize("Es sind 3.", "de")
        assert [(t.surface, t.kind) for t in tokens][-2:] == [
            ("3", NUMBER), (".", PUNCTUATION),
        ]

    def test_time_and_date_whole(self) -> None:
        assert tokenize("12:30", "de")[0].surface == "12:30"
        assert tokenize("24.12.2001", "de")[0].surface == "24.12.2001"
        assert tokenize("12/24/2001", "en")[0].surface == "12/24/2001"

    def test_spans_slice_back_to_surface(self) -> None:
        sentence = "Von 12:30 bis 13:00 gibt es 3,14 € Rabatt!"
        for token in tokenize(sentence, "de"):
            start, end = token.span
            assert sentence[start:end] == token.surface

    @given(st.text(alphabet="abÄö 12.,!?€%-'", max_size=40))
    @settings(max_examples=300)
    def test_span_tiling(self, sentence) -> None:
        tokens = tokenize(sentence, "de")
        covered = []
        for token in tokens:
            start, end = token.span
            assert sentence[start:end] == token.surface
            covered.extend(range(start, end))
        expected = [i for i, ch in enumerate(sentence) if not ch.isspace()]
        assert covered == expected


class TestPosTag:
    def tag(self, sentence: str, language: str = "en") -> dict[str, str]:
        tokens = pos_tag(tokenize(sentence, language), language)
        return {t.surface: t.pos for t in tokens if t.kind == WORD}

    def test_past_context_rule(self) -> None:
        tags = self.tag("I read it yesterday")
        assert tags["read"] == "VBD"
        assert tags["yesterday"] == "ADV"

    def test_infinitive_rule(self) -> None:
        assert self.tag("I will read it")["read"] == "VB"
        assert self.tag("to read")["read"] == "VB"

    def test_perfect_rule(self) -> None:
        assert self.tag("they have read it")["read"] == "VBD"

    def test_determiner_noun_rule(self) -> None:
        assert self.tag("the wound")["wound"] == "NOUN"

    def test_pronoun_present_verb(self) -> None:
        assert self.tag("they wound the rope")["wound"] == "VERB"

    def test_isolated_word_is_other(self) -> None:
        assert self.tag("Hello")["Hello"] == "OTHER"

    def test_every_word_token_tagged(self) -> None:
        tokens = pos_tag(tokenize("The 3 dogs ran quickly.", "en"), "en")
        for token in tokens:
            if token.kind == WORD:
                assert token.pos is not None

    def test_german_capitalized_noun(self) -> None:
        tags = self.tag("Ich habe Äpfel", "de")
        assert tags["Äpfel"] == "NOUN"
        assert tags["Ich"] == "OTHER"


class TestDetectEntities:
    def test_gazetteer_person_pair(self) -> None:
        tokens = pos_tag(tokenize("We spoke with John Smith today.", "en"), "en")
        detect_entities(tokens, "en", {"John": None, "Smith": None})
        by_surface = {t.surface: t.entity for t in tokens if t.kind == WORD}
        assert by_surface["John"] == PERSON
        assert by_surface["Smith"] == PERSON

    def test_all_caps_is_org_with_origin(self) -> None:
        tokens = pos_tag(tokenize("Die FBI untersucht den Fall.", "de"), "de")
        detect_entities(tokens, "de", {"FBI": "en"})
        fbi = next(t for t in tokens if t.surface == "FBI")
        assert fbi.entity == ORG
        assert fbi.language == "en"

    def test_sentence_initial_capitalized_word_not_entity(self) -> None:
        tokens = pos_tag(tokenize("Go home!", "en"), "en")
        detect_entities(tokens, "en", {})
        assert all(t.entity is None for t in tokens)

    def test_mid_sentence_capitalized_grouping(self) -> None:
        tokens = pos_tag(tokenize("We visited Rivertown Castle today.", "en"), "en")
        detect_entities(tokens, "en", {})
        assert {t.surface: t.entity for t in tokens if t.kind == WORD}[
            "Rivertown"] == MISC

    def test_german_capitalized_nouns_not_flagged(self) -> None:
        tokens = pos_tag(tokenize("Ich habe drei Äpfel im Garten.", "de"), "de")
        detect_entities(tokens, "de", {})
        assert all(t.entity is None for t in tokens)

    def test_load_gazetteer(self, tmp_path) -> None:
        path = tmp_path / "names.de.txt"
        path.write_text("FBI\ten\nBerlin\n", encoding="utf-8")
        table = load_gazetteer(path)
        assert table == {"FBI": "en", "Berlin": None}
