from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from olaph.corpus_stats import CorpusStats
from olaph.lexicon import Lexicon, LexiconEntry
from olaph.pipeline import PipelineConfig
from olaph.resources import Resources, load_resources

from oracles import ORACLE_PIECES

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def resources_en() -> Resources:
    return load_resources(None, ["en", "de", "fr", "es"])


@pytest.fixture(scope="session")
def resources_de() -> Resources:
    return load_resources(None, ["de", "en", "fr", "es"])


@pytest.fixture(scope="session")
def config_en() -> PipelineConfig:
    return PipelineConfig("en", ("en", "de", "fr", "es"))


@pytest.fixture(scope="session")
def config_de() -> PipelineConfig:
    return PipelineConfig("de", ("de", "en", "fr", "es"))


@pytest.fixture(scope="session")
def oracle_lexicon() -> Lexicon:
    entries = [LexiconEntry(piece, f"_{piece}_") for piece in ORACLE_PIECES]
    return Lexicon("xx", entries)


@pytest.fixture(scope="session")
def oracle_stats() -> CorpusStats:
    rng = random.Random(20240711)
    counts = {piece: rng.randint(1, 100) for piece in ORACLE_PIECES}
    return CorpusStats("xx", counts, sum(counts.values()))
