"""
Phonemizing text end to end
===========================

Walks a few sentences through the whole pipeline: sentence splitting,
normalization, entity handling, lexicon lookup, and compound fallbacks.
"""

from olaph import PipelineConfig, load_resources, phonemize_text, render_plain

# %%
# Load the bundled fixture resources. Each allowed language needs a lexicon
# and corpus statistics; profiles and gazetteers come along for detection.
resources = load_resources(None, ["en", "de", "fr", "es"])
config = PipelineConfig("en", ("en", "de", "fr", "es"))

for sentence in phonemize_text("Go home! I read it yesterday.", config, resources):
    print(sentence.text)
    print("  ", render_plain(sentence.items))

# %%
# Every word records which ladder level produced it. "NATO" hits the
# abbreviation lexicon; unknown words fall back to letter spelling.
for sentence in phonemize_text("NATO says hello.", config, resources):
    for word in sentence.words():
        print(f"{word.surface:>8}  {word.phonemes:<12} {word.source}")

# %%
# German: numbers are normalized before lookup, and compounds missing from
# the lexicon are split into known pieces ("Kriegsspiel" -> Kriegs + Spiel).
resources_de = load_resources(None, ["de", "en", "fr", "es"])
config_de = PipelineConfig("de", ("de", "en", "fr", "es"))

text = "Ich habe 3 Äpfel. Das Kriegsspiel beginnt um 12:30."
for sentence in phonemize_text(text, config_de, resources_de):
    print(sentence.text)
    for word in sentence.words():
        print(f"{word.surface:>16}  {word.phonemes:<22} {word.source}")

# %%
# Mixed-language input: the FBI keeps its English pronunciation inside a
# German sentence because entity detection attributes its origin language.
for sentence in phonemize_text("Die FBI untersucht den Fall.", config_de, resources_de):
    for word in sentence.words():
        print(f"{word.surface:>12}  {word.phonemes:<12} {word.language_used}")
