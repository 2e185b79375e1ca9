from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from olaph.corpus_stats import (
    CorpusStats,
    build_stats,
    load_stats,
    probability,
    save_stats,
)
from olaph.errors import CorpusStatsError


class TestBuildStats:
    def test_direct_count(self) -> None:
        stats = build_stats(["Spiel Spiel Krieg"], "de")
        assert stats.counts == {"spiel": 2, "krieg": 1}
        assert stats.total == 3

    def test_empty_stream(self) -> None:
        stats = build_stats([], "de")
        assert stats.counts == {} and stats.total == 0
        with pytest.raises(CorpusStatsError):
            probability(stats, "spiel")

    def test_punctuation_excluded(self) -> None:
        stats = build_stats(["Krieg, Krieg!"], "de")
        assert stats.counts == {"krieg": 2}

    def test_language_specific_letters_kept(self) -> None:
        stats = build_stats(["Käse straße élève"], "de")
        assert set(stats.counts) == {"käse", "straße", "élève"}

    def test_bytes_input(self) -> None:
        stats = build_stats(["Hallo Welt\n".encode()], "de")
        assert stats.counts == {"hallo": 1, "welt": 1}

    def test_undecodable_bytes_report_offset(self) -> None:
        with pytest.raises(CorpusStatsError, match="byte offset 6"):
            build_stats([b"Hallo \xff Welt"], "de")

    def test_order_insensitive(self) -> None:
        lines = ["ein Haus", "zwei Häuser", "drei Hunde drei"]
        forward = build_stats(lines, "de")
        backward = build_stats(list(reversed(lines)), "de")
        assert forward.counts == backward.counts
        assert forward.total == backward.total


class TestProbability:
    def test_count_over_total(self) -> None:
        stats = CorpusStats("de", {"spiel": 40, "krieg": 960}, 1000)
        assert probability(stats, "Spiel") == pytest.approx(0.04)

    def test_floor_for_absent(self) -> None:
        stats = CorpusStats("de", {"spiel": 40, "krieg": 960}, 1000,
                            floor_epsilon=5e-4)
        assert probability(stats, "unbekannt") == 5e-4

    def test_default_floor_is_half_count(self) -> None:
        stats = CorpusStats("de", {"spiel": 40, "krieg": 960}, 1000)
        assert probability(stats, "unbekannt") == pytest.approx(0.5 / 1000)

    def test_zero_total_errors(self) -> None:
        stats = CorpusStats("de", {}, 0)
        with pytest.raises(CorpusStatsError):
            probability(stats, "x")

    def test_stored_probabilities_sum_to_at_most_one(self) -> None:
        stats = build_stats(["a b c a b a"], "xx")
        assert sum(probability(stats, w) for w in stats.counts) <= 1.0 + 1e-12


class TestRoundTrip:
    def test_save_load_identity(self, tmp_path) -> None:
        stats = CorpusStats("de", {"spiel": 40, "krieg": 960}, 1000)
        path = tmp_path / "stats.de.tsv"
        save_stats(stats, path)
        loaded = load_stats(path)
        assert loaded == stats

    def test_save_load_with_configured_floor(self, tmp_path) -> None:
        stats = CorpusStats("de", {"a": 1}, 1, floor_epsilon=1e-6)
        path = tmp_path / "stats.de.tsv"
        save_stats(stats, path)
        assert load_stats(path) == stats

    def test_save_is_byte_deterministic(self, tmp_path) -> None:
        one = CorpusStats("de", {"b": 2, "a": 1}, 3)
        two = CorpusStats("de", {"a": 1, "b": 2}, 3)
        path_one, path_two = tmp_path / "one.tsv", tmp_path / "two.tsv"
        save_stats(one, path_one)
        save_stats(two, path_two)
        assert path_one.read_bytes() == path_two.read_bytes()

    def test_negative_count_rejected(self, tmp_path) -> None:
        path = tmp_path / "stats.de.tsv"
        path.write_text("#total\t1\nwort\t-1\n", encoding="utf-8")
        with pytest.raises(CorpusStatsError, match=":2"):
            load_stats(path)

    def test_inconsistent_total_rejected(self, tmp_path) -> None:
        path = tmp_path / "stats.de.tsv"
        path.write_text("#total\t5\nwort\t1\n", encoding="utf-8")
        with pytest.raises(CorpusStatsError, match="declared total"):
            load_stats(path)

    def test_language_from_filename_when_header_missing(self, tmp_path) -> None:
        path = tmp_path / "stats.fr.tsv"
        path.write_text("#total\t1\nmot\t1\n", encoding="utf-8")
        assert load_stats(path).language == "fr"


@given(st.lists(st.text(alphabet="abcä ", min_size=0, max_size=12), max_size=12))
def test_build_stats_permutation_invariance(lines) -> None:
    forward = build_stats(lines, "xx")
    backward = build_stats(list(reversed(lines)), "xx")
    assert forward.counts == backward.counts and forward.total == backward.total


@given(st.dictionaries(st.text(alphabet="abcdeäöü", min_size=1, max_size=8),
                       st.integers(min_value=1, max_value=10**6), max_size=20))
def test_round_trip_property(tmp_path_factory, counts) -> None:
    stats = CorpusStats("xx", counts, sum(counts.values()))
    path = tmp_path_factory.mktemp("stats") / "stats.xx.tsv"
    save_stats(stats, path)
    assert load_stats(path) == stats


def test_invariant_total_must_match_counts() -> None:
    with pytest.raises(CorpusStatsError):
        CorpusStats("de", {"a": 2}, 3)
