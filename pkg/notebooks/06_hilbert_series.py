# %% [markdown]
# # Hilbert series and their dominant growth
#
# Dimension sequences are fitted exactly by rational functions with poles
# at `1/j`.  The limit of `a_n / j^n` at the dominant pole is the quantity
# the growth theorems predict.

# %%
from fractions import Fraction

from fsbcat.series import LimitDiverges, pole_set, residue_at
from fsbcat.suites import fit_dmod, fit_projective

for d in range(3):
    f = fit_projective(d)
    print(d, f, residue_at(f, 2 * d + 1))

# %%
f1 = fit_dmod(1)
print(f1, sorted(pole_set(f1)), residue_at(f1, 3))

# %% [markdown]
# For the degree two space the dominant pole is at `1/7`, with limit
# `dim D^1[-3, 3] / 48 = 1/12`.  The pole at `1/3` is not dominant.

# %%
f2 = fit_dmod(2)
print(f2)
print(residue_at(f2, 7) == Fraction(1, 12))
try:
    residue_at(f2, 3)
except LimitDiverges as exc:
    print(exc)
