"""
Number and symbol normalization
===============================

English relies on conventional long-form wording; German builds compound
number words and inflects ordinals.
"""

from olaph.normalizer import (
    normalize_cardinal,
    normalize_date,
    normalize_decimal,
    normalize_ordinal,
    normalize_time,
    normalize_year,
)

# %%
# Cardinals.
for n in (0, 7, 21, 42, 105, 2019, -13):
    print(f"{n:>6}  en: {normalize_cardinal(n, 'en'):<32} de: {normalize_cardinal(n, 'de')}")

# %%
# Ordinals; German exposes the inflection suffix for constructs like dates.
for n in (1, 3, 8, 21):
    print(f"{n:>3}.  en: {normalize_ordinal(n, 'en'):<14} de: {normalize_ordinal(n, 'de')}")
print("24. (strong masculine):", normalize_ordinal(24, "de", "er"))

# %%
# Decimals, dates, times, years.
print(normalize_decimal("3.14", "en"))
print(normalize_decimal("3,14", "de"))
print(normalize_date("24.12.2001", "de"))
print(normalize_date("7/4/1984", "en"))
print(normalize_time("12:30", "de"))
print(normalize_time("12:05", "en"))
print(normalize_year(1984, "en"), "/", normalize_year(1984, "de"))
