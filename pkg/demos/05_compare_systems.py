"""
Comparing phonemizer outputs
============================

Aligns per-word outputs of multiple systems over a shared tokenization and
buckets each word into all_match / partial_match / mismatch after removing
verbose symbols (stress, length, syllable dots).
"""

from olaph.evaluate import align_outputs, category_counts, strip_verbose

# %%
# Verbose symbols differ across systems without changing the pronunciation;
# they are stripped before comparison.
print(strip_verbose("ˈneɪ.toʊ"), "==", strip_verbose("neɪtoʊ"))

# %%
# Three hypothetical systems over five words.
reference = ["nato", "read", "wound", "stapler", "montreal"]
systems = {
    "alpha": ["ˈneɪ.toʊ", "ɹiːd", "wuːnd", "ˈsteɪplɚ", "mɔ̃ʁeal"],
    "bravo": ["neɪtoʊ", "ɹid", "waʊnd", "ˈsteɪplɚ", "mʌntɹiɑl"],
    "carol": ["neɪtoʊ", "ɹɛd", "wʊnd", "ʃtaplɐ", "mɔntʁeːal"],
}
rows = align_outputs(reference, systems)
for row in rows:
    print(f"{row.surface:<10} {row.category:<14}", row.outputs)

print(category_counts(rows))
