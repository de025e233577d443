# %% [markdown]
# # Ordered surjections as words
#
# An ordered morphism `[-n, n] -> [-m, m]` is recorded as the word of its
# images.  The subword order on words matches the factorization order on
# morphisms, and principal ideals are regular languages with rational
# generating functions.

# %%
from fsbcat.osb_words import (
    Word,
    enumerate_osb,
    ideal_series,
    iota,
    morphism_leq,
    principal_ideal_automaton,
    word_leq,
)
from fsbcat.series import pole_set

# %%
phis = enumerate_osb(3, 1)
print(len(phis), [iota(p) for p in phis[:5]])

# %% [markdown]
# The word order agrees with the morphism order on all pairs with target 1.

# %%
homs = [p for n in range(1, 4) for p in enumerate_osb(n, 1)]
print(all(morphism_leq(a, b) == word_leq(iota(a), iota(b)) for a in homs for b in homs))

# %% [markdown]
# Principal ideals and their series.  The letter 0 is exempt from the
# first-occurrence rule; `exempt_zero=False` gives the literal reading.

# %%
for text, alpha in (("1", 1), ("1 2", 2), ("2 -1", 2)):
    w = Word.parse(alpha, text)
    for exempt in (True, False):
        s = ideal_series(principal_ideal_automaton(w, exempt_zero=exempt))
        print(text, exempt, s, sorted(pole_set(s)))
