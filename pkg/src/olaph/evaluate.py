"""Output comparison across phonemizer systems: verbose-symbol stripping,
word-level alignment, and match categorization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

ALL_MATCH = "all_match"
PARTIAL_MATCH = "partial_match"
MISMATCH = "mismatch"

# Stress marks, length marks, syllable separators, and tie bars; these vary
# across systems without signalling a pronunciation difference.
VERBOSE_CHARS = frozenset("ˈˌːˑ.͜͡")


def strip_verbose(phonemes: str) -> str:
    """Drop stress/length/syllable/tie codepoints, preserving the rest in
    order. Idempotent."""
    return "".join(ch for ch in phonemes if ch not in VERBOSE_CHARS)


@dataclass(frozen=True)
class AlignmentRow:
    surface: str
    outputs: dict[str, str]
    category: str


def align_outputs(
    reference_tokens: list[str],
    systems: Mapping[str, list[str]],
) -> list[AlignmentRow]:
    """Categorize per-word agreement among systems that share one
    tokenization.

    Each system must supply exactly one phoneme string per reference word;
    a length mismatch is an error naming the offending system. Outputs are
    compared after strip_verbose: all equal -> all_match, some but not all
    equal -> partial_match, otherwise mismatch.
    """
    if not systems:
        raise ValueError("at least one system required")
    for name, outputs in systems.items():
        if len(outputs) != len(reference_tokens):
            raise ValueError(
                f"system {name!r} produced {len(outputs)} outputs "
                f"for {len(reference_tokens)} reference tokens"
            )
    rows: list[AlignmentRow] = []
    for index, surface in enumerate(reference_tokens):
        outputs = {name: systems[name][index] for name in systems}
        stripped = [strip_verbose(value) for value in outputs.values()]
        distinct = len(set(stripped))
        if distinct == 1:
            category = ALL_MATCH
        elif distinct == len(stripped):
            category = MISMATCH
        else:
            category = PARTIAL_MATCH
        rows.append(AlignmentRow(surface, outputs, category))
    return rows


def category_counts(rows: Iterable[AlignmentRow]) -> dict[str, int]:
    counts = {ALL_MATCH: 0, PARTIAL_MATCH: 0, MISMATCH: 0}
    for row in rows:
        counts[row.category] += 1
    return counts


def write_report(rows: list[AlignmentRow], system_names: list[str], path) -> None:
    """Write a review-ready TSV: surface, one column per system, category."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("surface\t" + "\t".join(system_names) + "\tcategory\n")
        for row in rows:
            cells = [row.surface] + [row.outputs[name] for name in system_names]
            fh.write("\t".join(cells) + f"\t{row.category}\n")
