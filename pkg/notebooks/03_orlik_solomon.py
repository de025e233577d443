# %% [markdown]
# # Orlik-Solomon algebras and restriction maps
#
# Graded pieces are computed on the no-broken-circuit basis.  A morphism of
# sets with involution induces a map between the algebras of the two
# arrangements, which makes each graded piece a functor.

# %%
from fsbcat.arrangements import ArrIsoType, os_hilbert
from fsbcat.fsb_core import BMorphism
from fsbcat.os_algebra import build_os, dual_vector, psi_morphisms, pullback, restriction_map

# %%
for n in range(6):
    print(n, build_os(n, "B").dims, os_hilbert(ArrIsoType(n)).to_list())

# %% [markdown]
# The degree one map for the fold `(1, 1): [-2, 2] -> [-1, 1]`.

# %%
m = restriction_map(BMorphism(2, 1, (1, 1)), 1)
print(m.shape, m.matrix)

# %% [markdown]
# Pullbacks of the dual vector `v_{1,-1}` along the three maps `psi_k`.
# The alternating sum is `2 v_{1,-1} + v_{1,2}`; `v_{1,2}` itself is
# `(psi_1 + psi_2 + psi_3 - 2 fold) / 3` applied to `v_{1,-1}`.  The
# coordinate hyperplane `x_a = 0` is printed with label `(a, 0)`; it is the
# one written `v_{a,-a}`.

# %%
src, tgt = build_os(2, "B", 1), build_os(1, "B", 1)
x = dual_vector(tgt, {(1, -1): 1})
labels = [h.label() for h in src.hyperplanes]
for k, psi in enumerate(psi_morphisms(1), 1):
    vec = pullback(psi, x)
    print(f"psi_{k}", psi.images, {lab: int(c) for lab, c in zip(labels, vec) if c})
