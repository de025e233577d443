# %% [markdown]
# # Kazhdan-Lusztig polynomials of B_n
#
# The recursion runs over isomorphism types of arrangements, so each `B_n`
# costs a sum over partitions rather than over flats.

# %%
import tempfile
from pathlib import Path

from fsbcat.arrangements import ArrIsoType
from fsbcat.kl_engine import KLEngine, KLTable

engine = KLEngine()
for n in range(11):
    print(n, engine.kl_poly(ArrIsoType(n)).to_list())

# %% [markdown]
# The linear coefficient is `(3^n - 1)/2 - n^2`.

# %%
print(all(engine.dim_D(1, n) == (3 ** n - 1) // 2 - n * n for n in range(20)))

# %% [markdown]
# Type A values for comparison.

# %%
print([engine.kl_poly(ArrIsoType.type_A(n)).to_list() for n in range(2, 8)])

# %% [markdown]
# The table can be cached on disk and reused.

# %%
path = Path(tempfile.mkdtemp()) / "kl.json"
engine.table.store(path)
warm = KLEngine(KLTable.load(path))
warm.kl_poly(ArrIsoType(10))
print(len(warm.table), warm.recursions)
