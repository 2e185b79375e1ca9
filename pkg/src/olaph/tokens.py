"""Token type shared by the tokenizer, the normalizer, and the pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

WORD = "word"
NUMBER = "number"
SYMBOL = "symbol"
PUNCTUATION = "punctuation"


@dataclass
class Token:
    """A classified span of one sentence.

    ``span`` holds code-point offsets such that ``sentence[start:end]``
    equals ``surface`` for tokens produced by the tokenizer. Tokens
    synthesized by normalization reuse their parent's span and carry
    ``normalized=True`` (they skip abbreviation checks downstream).
    """

    surface: str
    span: tuple[int, int]
    kind: str
    pos: Optional[str] = None
    entity: Optional[str] = None
    language: Optional[str] = None
    normalized: bool = False
