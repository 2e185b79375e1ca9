"""Grapheme-phoneme training-pair generation over a text corpus."""

from __future__ import annotations

import json
import logging
from typing import IO, Iterable, NamedTuple

from .pipeline import (
    SOURCE_UNRESOLVED,
    PipelineConfig,
    render_plain,
)
from .pipeline import phonemize_text
from .resources import Resources

logger = logging.getLogger(__name__)


class GenPairsResult(NamedTuple):
    written: int
    skipped: int


def gen_pairs(
    corpus: Iterable[str],
    config: PipelineConfig,
    resources: Resources,
    out: IO[str],
) -> GenPairsResult:
    """Phonemize each input line and emit one JSONL record
    ``{"lang", "text", "phonemes"}`` per fully resolved line.

    Lines containing any unresolved word are skipped and counted; written
    plus skipped always equals the number of input lines. Output is
    byte-identical across runs for identical input and configuration.
    """
    written = 0
    skipped = 0
    for raw in corpus:
        line = raw.rstrip("\n")
        sentences = phonemize_text(line, config, resources)
        unresolved = any(
            word.source == SOURCE_UNRESOLVED
            for sentence in sentences
            for word in sentence.words()
        )
        if unresolved:
            skipped += 1
            logger.debug("skipping line with unresolved words: %r", line)
            continue
        phonemes = " ".join(render_plain(s.items) for s in sentences)
        record = {
            "lang": config.primary_language,
            "text": line,
            "phonemes": phonemes,
        }
        out.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        written += 1
    return GenPairsResult(written, skipped)
