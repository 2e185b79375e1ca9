/** One word (or punctuation passthrough) of a phonemized sentence. */
export interface PhonemizedWordRecord {
  surface: string;
  phonemes: string;
  source:
    | "lexicon_primary"
    | "lexicon_foreign"
    | "abbreviation"
    | "normalized"
    | "compound"
    | "charmap"
    | "unresolved"
    | "punctuation";
  lang: string;
}

/** One sentence of pipeline output, mirroring the CLI's JSONL records. */
export interface SentenceRecord {
  text: string;
  words: PhonemizedWordRecord[];
}

/** Best compound segmentation of a single word. */
export interface SplitResult {
  pieces: string[];
  score: number;
}

export interface PhonemizerOptions {
  /** Relative-length exponent of the segmentation score (default 1.0). */
  alpha?: number;
  /** Subword-count penalty exponent of the segmentation score (default 15). */
  beta?: number;
  /** Remove stress/length/syllable marks from output phonemes. */
  stripVerbose?: boolean;
  /** Executable to invoke (default "olaph", or $OLAPH_CLI). */
  cliPath?: string;
}
