import { spawnSync } from "node:child_process";
import { existsSync } from "node:fs";
import { resolve } from "node:path";

import type {
  PhonemizerOptions,
  SentenceRecord,
  SplitResult,
} from "./types.js";

export type {
  PhonemizedWordRecord,
  PhonemizerOptions,
  SentenceRecord,
  SplitResult,
} from "./types.js";

const SUPPORTED_LANGUAGES = new Set(["en", "de"]);
const REQUIRED_FILES = ["lex", "stats"];

function defaultCli(): string {
  return process.env.OLAPH_CLI ?? "olaph";
}

/**
 * A loaded, reusable phonemizer handle. Construction validates resources
 * eagerly; every call shells out to the CLI, so output is byte-identical
 * to `olaph phonemize --format jsonl` for the same configuration.
 */
export class Phonemizer {
  readonly lexiconDir: string;
  readonly language: string;
  private readonly options: PhonemizerOptions;

  constructor(lexiconDir: string, language: string, options: PhonemizerOptions = {}) {
    if (!SUPPORTED_LANGUAGES.has(language)) {
      throw new Error(`unsupported language: ${language}`);
    }
    const dir = resolve(lexiconDir);
    if (!existsSync(dir)) {
      throw new Error(`resource directory not found: ${dir}`);
    }
    for (const prefix of REQUIRED_FILES) {
      const name = `${prefix}.${language}.tsv`;
      if (!existsSync(resolve(dir, name))) {
        throw new Error(`missing resource file: ${name}`);
      }
    }
    this.lexiconDir = dir;
    this.language = language;
    this.options = options;
  }

  private commonArgs(): string[] {
    const args = ["--lang", this.language, "--lexicon-dir", this.lexiconDir];
    if (this.options.alpha !== undefined) {
      args.push("--alpha", String(this.options.alpha));
    }
    if (this.options.beta !== undefined) {
      args.push("--beta", String(this.options.beta));
    }
    return args;
  }

  private run(args: string[], input?: string): string {
    const cli = this.options.cliPath ?? defaultCli();
    const result = spawnSync(cli, args, {
      input,
      encoding: "utf-8",
      maxBuffer: 64 * 1024 * 1024,
    });
    if (result.error) {
      throw new Error(`failed to invoke ${cli}: ${result.error.message}`);
    }
    if (result.status !== 0) {
      const detail = (result.stderr ?? "").trim();
      throw new Error(`${cli} exited with ${result.status}: ${detail}`);
    }
    return result.stdout;
  }

  /** Phonemize a text; one record per sentence, words in order. */
  phonemize(text: string): SentenceRecord[] {
    if (text.trim() === "") {
      return [];
    }
    const args = ["phonemize", ...this.commonArgs(), "--format", "jsonl", "--stdin"];
    if (this.options.stripVerbose) {
      args.splice(1, 0, "--strip-verbose");
    }
    const stdout = this.run(args, text);
    return stdout
      .split("\n")
      .filter((line) => line.length > 0)
      .map((line) => JSON.parse(line) as SentenceRecord);
  }

  /** Best compound segmentation of one word, or null when none exists. */
  split(word: string): SplitResult | null {
    const args = ["split", ...this.commonArgs(), word];
    let stdout: string;
    try {
      stdout = this.run(args);
    } catch (error) {
      if (error instanceof Error && error.message.includes("no segmentation")) {
        return null;
      }
      throw error;
    }
    const [pieces, score] = stdout.trim().split("\t");
    return { pieces: pieces!.split("|"), score: Number(score) };
  }
}

/**
 * Create a phonemizer over a resource directory. Fails eagerly when the
 * language is unsupported or a required file is missing.
 */
export function create(
  lexiconDir: string,
  language: string,
  options: PhonemizerOptions = {},
): Phonemizer {
  return new Phonemizer(lexiconDir, language, options);
}
