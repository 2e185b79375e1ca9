"""
Probabilistic compound splitting
================================

Shows how candidate segmentations are enumerated and scored, and how the
subword-count penalty steers the choice.
"""

from olaph import CorpusStats, Lexicon, LexiconEntry, ScoreParams, best_split
from olaph.splitter import enumerate_segmentations, score_segmentation

# %%
# A miniature lexicon and corpus. "kriegsspiel" has exactly one cover:
# "krieg" + "sspiel" fails because "sspiel" is not a known word.
lexicon = Lexicon("de", [
    LexiconEntry("krieg", "kʁiːk"),
    LexiconEntry("kriegs", "kʁiks"),
    LexiconEntry("spiel", "ʃpil"),
])
stats = CorpusStats("de", {"krieg": 50, "kriegs": 10, "spiel": 40, "krone": 900}, 1000)

segmentation = best_split("kriegsspiel", [lexicon], stats)
print(segmentation.surfaces(), f"score={segmentation.score:.3e}")
print("phonemes:", "".join(s.phonemes for s in segmentation.subwords))

# %%
# Enumerate all covers of an ambiguous word and score each one. The score
# sums per-subword terms (corpus probability, relative length, short-word
# penalty) and multiplies by n^-beta for a cover of n subwords.
candidates = {"ab": ("xx", "AB"), "abc": ("xx", "ABC"), "c": ("xx", "C"),
              "a": ("xx", "A"), "bc": ("xx", "BC")}
toy_stats = CorpusStats("xx", {"ab": 30, "abc": 5, "c": 40, "a": 20, "bc": 5}, 100)

covers = enumerate_segmentations("abc", lambda piece: candidates.get(piece))
for cover in covers:
    score = score_segmentation(cover, toy_stats, ScoreParams(alpha=1.0, beta=15.0))
    print(cover.surfaces(), f"{score:.3e}")

# %%
# With beta=0 the many-piece cover can win on raw probability; raising beta
# makes longer pieces dominate.
toy_lexicon = Lexicon("xx", [LexiconEntry(g, g.upper()) for g in candidates])
for beta in (0.0, 5.0, 15.0):
    pick = best_split("abc", [toy_lexicon], toy_stats, ScoreParams(1.0, beta))
    print(f"beta={beta:>4}: {pick.surfaces()}")
