# %% [markdown]
# # Surjections with involution and flats of B_n
#
# A morphism `[-n, n] -> [-d, d]` is an odd surjection.  Up to the action of
# the hyperoctahedral group on the source, these morphisms are the same thing
# as flats of the type B arrangement of dimension `d`.

# %%
from fsbcat.arrangements import flats_B, localization_type, contraction_type
from fsbcat.fsb_core import enumerate_hom, hom_count, orbit_classes

# %% [markdown]
# Counting morphisms, and listing the eight morphisms `[-2, 2] -> [-1, 1]`.

# %%
print([hom_count(n, 1) for n in range(7)])
for phi in enumerate_hom(2, 1):
    print(phi.images)

# %% [markdown]
# Orbit classes against flats, sorted by dimension.

# %%
for n in range(6):
    by_dim = [len(orbit_classes(n, d)) for d in range(n + 1)]
    flats = [sum(1 for f in flats_B(n) if f.dim == d) for d in range(n + 1)]
    print(n, by_dim, by_dim == flats)

# %% [markdown]
# Every flat splits the arrangement into a localization and a contraction.

# %%
for f in flats_B(2):
    print(f.dim, sorted(f.zero_block), f.blocks, localization_type(f), contraction_type(f))
