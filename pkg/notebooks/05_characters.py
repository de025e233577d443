# %% [markdown]
# # Characters of the hyperoctahedral group
#
# Irreducibles are labelled by bipartitions `(lam, mu)`.  We decompose the
# permutation representations on morphisms and the degree one KL space.

# %%
from fsbcat.rep_theory import (
    c_lambda_report,
    character_table_csv,
    d1_virtual_character,
    decompose,
    projective_character,
    verify_length_bounds,
)

print(character_table_csv(2))

# %% [markdown]
# Constituents of `Hom([-n, n], [-1, 1])` stay within the length bounds.

# %%
for n in range(1, 6):
    dec = decompose(projective_character(n, 1))
    print(n, {str(bp): m for bp, m in dec.items()}, verify_length_bounds(projective_character(n, 1), 1))

# %% [markdown]
# The degree one KL space as a genuine representation.

# %%
for n in range(3, 7):
    print(n, {str(bp): m for bp, m in decompose(d1_virtual_character(n)).items()})

# %% [markdown]
# The closed-form multiplicity table from the literature does not match.

# %%
rep = c_lambda_report(4)
print(rep["printed_table_dimension"], rep["computed_dimension"], rep["agrees"])
