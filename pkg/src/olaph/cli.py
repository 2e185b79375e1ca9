"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags, unsupported language),
2 data error (malformed resource or input files).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .corpus_stats import build_stats, save_stats
from .datagen import gen_pairs
from .errors import OlaphError
from .evaluate import align_outputs, category_counts, write_report
from .nlp import tokenize
from .normalizer import normalize_token
from .pipeline import (
    PipelineConfig,
    Punctuation,
    phonemize_text,
    render_plain,
    sentence_to_record,
)
from .resources import available_languages, default_data_dir, load_resources
from .splitter import ScoreParams, best_split
from .tokens import NUMBER, SYMBOL, WORD

NORMALIZER_LANGUAGES = ("en", "de")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _data_dir(args: argparse.Namespace) -> Path:
    if getattr(args, "lexicon_dir", None):
        return Path(args.lexicon_dir)
    env = os.environ.get("OLAPH_DATA")
    if env:
        return Path(env)
    return default_data_dir()


def _load(args: argparse.Namespace, primary: str):
    directory = _data_dir(args)
    languages = available_languages(directory)
    if primary not in languages:
        print(f"olaph: unsupported language {primary!r} "
              f"(available: {', '.join(languages) or 'none'})", file=sys.stderr)
        raise SystemExit(1)
    ordered = [primary] + [code for code in languages if code != primary]
    return load_resources(directory, ordered)


def _config(args: argparse.Namespace, resources) -> PipelineConfig:
    return PipelineConfig(
        primary_language=args.lang,
        allowed_languages=tuple(resources.languages),
        score_params=ScoreParams(
            alpha=getattr(args, "alpha", 1.0),
            beta=getattr(args, "beta", 15.0),
        ),
        strip_verbose=getattr(args, "strip_verbose", False),
    )


def _read_text(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    if args.stdin:
        return sys.stdin.read()
    if args.text is None:
        parser.error("TEXT argument or --stdin required")
    return args.text


def _cmd_phonemize(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.lang not in NORMALIZER_LANGUAGES:
        print(f"olaph: unsupported language {args.lang!r} "
              f"(phonemize supports: {', '.join(NORMALIZER_LANGUAGES)})", file=sys.stderr)
        return 1
    text = _read_text(args, parser)
    resources = _load(args, args.lang)
    config = _config(args, resources)
    sentences = phonemize_text(text, config, resources)
    if args.format == "jsonl":
        for sentence in sentences:
            record = sentence_to_record(sentence)
            print(json.dumps(record, ensure_ascii=False, sort_keys=True))
    else:
        for sentence in sentences:
            print(render_plain(sentence.items))
    return 0


def _cmd_split(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    resources = _load(args, args.lang)
    config = _config(args, resources)
    lexica = [resources.lexica[code] for code in config.allowed_languages]
    detector = (
        (lambda text, allowed: resources.detect(text, list(allowed)))
        if resources.profiles
        else None
    )
    segmentation = best_split(
        args.word, lexica, resources.stats[args.lang],
        config.score_params, detector,
    )
    if segmentation is None:
        print(f"olaph: no segmentation found for {args.word!r}", file=sys.stderr)
        return 2
    pieces = "|".join(segmentation.surfaces())
    print(f"{pieces}\t{segmentation.score!r}")
    return 0


def _cmd_normalize(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.lang not in NORMALIZER_LANGUAGES:
        print(f"olaph: unsupported language {args.lang!r} "
              f"(normalize supports: {', '.join(NORMALIZER_LANGUAGES)})", file=sys.stderr)
        return 1
    resources = _load(args, args.lang)
    aux = resources.aux[args.lang]
    pieces: list[str] = []
    tokens = tokenize(args.text, args.lang)
    numeric = [t for t in tokens if t.kind in (WORD, NUMBER)]
    positions = {id(t): i for i, t in enumerate(numeric)}
    for token in tokens:
        if token.kind in (NUMBER, SYMBOL):
            if token.kind == NUMBER:
                index = positions[id(token)]
                context = (
                    numeric[index - 1].surface if index > 0 else None,
                    numeric[index + 1].surface if index + 1 < len(numeric) else None,
                )
            else:
                context = (None, None)
            replacement = normalize_token(token, args.lang, context, aux)
            if replacement:
                pieces.extend(t.surface for t in replacement)
            elif token.kind == SYMBOL:
                pieces.append(token.surface)
        else:
            pieces.append(token.surface)
    print(" ".join(pieces))
    return 0


def _cmd_build_stats(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    corpus_path = Path(args.corpus)
    if not corpus_path.exists():
        print(f"olaph: corpus file not found: {corpus_path}", file=sys.stderr)
        return 2
    with open(corpus_path, "rb") as fh:
        stats = build_stats(fh, args.lang)
    save_stats(stats, args.output)
    print(f"wrote {len(stats.counts)} words ({stats.total} tokens) to {args.output}")
    return 0


def _cmd_gen_pairs(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.lang not in NORMALIZER_LANGUAGES:
        print(f"olaph: unsupported language {args.lang!r}", file=sys.stderr)
        return 1
    corpus_path = Path(args.corpus)
    if not corpus_path.exists():
        print(f"olaph: corpus file not found: {corpus_path}", file=sys.stderr)
        return 2
    resources = _load(args, args.lang)
    config = _config(args, resources)
    with open(corpus_path, "r", encoding="utf-8") as corpus, \
            open(args.output, "w", encoding="utf-8", newline="\n") as out:
        result = gen_pairs(corpus, config, resources, out)
    print(f"wrote {result.written} pairs ({result.skipped} skipped) to {args.output}")
    return 0


def _cmd_compare(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    tokens_path = Path(args.tokens)
    if not tokens_path.exists():
        print(f"olaph: tokens file not found: {tokens_path}", file=sys.stderr)
        return 2
    reference = tokens_path.read_text(encoding="utf-8").splitlines()
    systems: dict[str, list[str]] = {}
    for system_file in args.systems:
        path = Path(system_file)
        if not path.exists():
            print(f"olaph: system file not found: {path}", file=sys.stderr)
            return 2
        systems[path.stem] = path.read_text(encoding="utf-8").splitlines()
    try:
        rows = align_outputs(reference, systems)
    except ValueError as exc:
        print(f"olaph: {exc}", file=sys.stderr)
        return 2
    counts = category_counts(rows)
    if args.report:
        write_report(rows, list(systems), args.report)
    for category in ("all_match", "partial_match", "mismatch"):
        print(f"{category}\t{counts[category]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="olaph", description="Text to IPA phonemization")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lang", required=True, help="primary language code")
        p.add_argument("--lexicon-dir", help="resource directory (default: $OLAPH_DATA)")
        p.add_argument("--alpha", type=float, default=1.0,
                       help="relative-length exponent (default 1.0)")
        p.add_argument("--beta", type=float, default=15.0,
                       help="subword-count penalty exponent (default 15)")

    p_phon = sub.add_parser("phonemize", help="phonemize text")
    add_common(p_phon)
    p_phon.add_argument("--strip-verbose", action="store_true",
                        help="remove stress/length/syllable marks from output")
    p_phon.add_argument("--format", choices=("text", "jsonl"), default="text")
    p_phon.add_argument("--stdin", action="store_true", help="read text from stdin")
    p_phon.add_argument("text", nargs="?", metavar="TEXT")
    p_phon.set_defaults(func=_cmd_phonemize)

    p_split = sub.add_parser("split", help="best compound segmentation of one word")
    add_common(p_split)
    p_split.add_argument("word", metavar="WORD")
    p_split.set_defaults(func=_cmd_split)

    p_norm = sub.add_parser("normalize", help="expand numbers and symbols to words")
    add_common(p_norm)
    p_norm.add_argument("text", metavar="TEXT")
    p_norm.set_defaults(func=_cmd_normalize)

    p_stats = sub.add_parser("build-stats", help="count corpus word frequencies")
    p_stats.add_argument("--lang", required=True)
    p_stats.add_argument("corpus", metavar="CORPUS")
    p_stats.add_argument("-o", "--output", required=True, metavar="FILE")
    p_stats.set_defaults(func=_cmd_build_stats)

    p_pairs = sub.add_parser("gen-pairs", help="emit grapheme-phoneme training pairs")
    add_common(p_pairs)
    p_pairs.add_argument("corpus", metavar="CORPUS")
    p_pairs.add_argument("-o", "--output", required=True, metavar="FILE")
    p_pairs.set_defaults(func=_cmd_gen_pairs)

    p_cmp = sub.add_parser("compare", help="align outputs of multiple phonemizers")
    p_cmp.add_argument("--tokens", required=True, metavar="FILE",
                       help="reference word surfaces, one per line")
    p_cmp.add_argument("systems", nargs="+", metavar="SYSTEM.txt",
                       help="per-system phoneme outputs, one word per line")
    p_cmp.add_argument("--report", metavar="FILE", help="write per-word TSV report")
    p_cmp.set_defaults(func=_cmd_compare)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except OlaphError as exc:
        print(f"olaph: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"olaph: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
