"""
Character-trigram language identification
=========================================

Profiles are trained from the bundled corpora; detection sums trigram
log-weights and reports a softmax confidence with a fallback threshold.
"""

from pathlib import Path

from olaph.langid import detect_language, train_language_profiles
from olaph.resources import default_data_dir

# %%
# Train profiles from the shipped fixture corpora (the packaged
# profile.<lang>.tsv files are exactly these, saved).
data = default_data_dir()
corpora = {
    code: (data / f"corpus.{code}.txt").read_text(encoding="utf-8").splitlines()
    for code in ("en", "de", "fr", "es")
}
profiles = train_language_profiles(corpora)

# %%
# Long snippets detect with near-certain confidence; single short words sit
# closer to the fallback threshold.
samples = [
    "the quick brown fox jumps over the lazy dog",
    "Donaudampfschifffahrt",
    "le petit déjeuner est prêt",
    "la fiesta empieza esta noche",
    "stapler",
]
for text in samples:
    guess = detect_language(text, ("en", "de", "fr", "es"), profiles)
    flag = " (fallback)" if guess.fallback else ""
    print(f"{text:<44} -> {guess.language}  conf={guess.confidence:.3f}{flag}")

# %%
# Self-consistency: every training line should classify as its own language.
for code, lines in corpora.items():
    hits = sum(
        1 for line in lines
        if detect_language(line, ("en", "de", "fr", "es"), profiles).language == code
    )
    print(f"{code}: {hits}/{len(lines)} training lines correct")
