"""Kazhdan-Lusztig polynomials of type A/B Coxeter arrangements.

The recursion runs over isomorphism types, never over individual flats:

    t^rk P_T(1/t) = sum over flats F of chi(localization at F) * P(contraction at F)

with ``P`` of the empty type equal to 1 and ``deg P_T < rk T / 2``.  The
bottom flat contributes ``P_T`` itself, so ``P_T`` is minus the part of
degree ``< rk/2`` of the sum over the other flats.  Flats are counted by
type (see :func:`flat_type_census`).

Polynomials are memoized in a :class:`KLTable`, which can be written to
and read from a JSON cache file.  The first computation validates the
localization/contraction roles against the degree-one identity
``[t] P = #(flats of dimension 1) - #(hyperplanes)`` counted on explicit flats.
"""

from __future__ import annotations

import json
import os
import threading
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator

from .arrangements import ArrIsoType, check_kind, flats_A, flats_B, localization_type, contraction_type
from .series import Polynomial

__all__ = [
    "CONVENTION_TAG",
    "CACHE_VERSION",
    "ConventionError",
    "CacheMismatch",
    "KLTable",
    "KLEngine",
    "default_engine",
    "kl_poly",
    "dim_D",
    "flat_type_census",
    "flat_type_census_bruteforce",
    "integer_partitions",
    "validate_convention",
]

CONVENTION_TAG = "tP(1/t)=sum_F chi(loc_F) P(contr_F)"
CACHE_VERSION = 1


class ConventionError(RuntimeError):
    """The recursion disagrees with the degree-one check (roles swapped?)."""


class CacheMismatch(ValueError):
    """Cache header does not match this code's version or convention."""


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def _set_partition_count(sizes: tuple[int, ...]) -> int:
    """Number of set partitions of ``[sum sizes]`` with the given block sizes."""
    out = factorial(sum(sizes))
    for s, m in Counter(sizes).items():
        out //= factorial(s) ** m * factorial(m)
    return out


def _census_B(b: int) -> Counter:
    out: Counter = Counter()
    for z in range(b + 1):
        choose_zero = factorial(b) // (factorial(z) * factorial(b - z))
        for sizes in integer_partitions(b - z):
            signs = 2 ** sum(s - 1 for s in sizes)
            count = choose_zero * _set_partition_count(sizes) * signs
            out[(ArrIsoType(z, sizes), ArrIsoType(len(sizes)))] += count
    return out


def _census_A(a: int) -> Counter:
    out: Counter = Counter()
    for sizes in integer_partitions(a):
        out[(ArrIsoType(0, sizes), ArrIsoType.type_A(len(sizes)))] += _set_partition_count(sizes)
    return out


def flat_type_census(T: ArrIsoType | int, kind: str | None = None) -> Counter:
    """Counter ``{(localization type, contraction type): number of flats}``.

    Accepts an :class:`ArrIsoType` or ``(n, kind)`` for the full arrangement
    ``B_n`` or ``A`` on an ``n``-set.  Product types multiply censuses.
    """
    if not isinstance(T, ArrIsoType):
        kind = check_kind(kind or "B")
        T = ArrIsoType(T) if kind == "B" else ArrIsoType.type_A(T)
    out: Counter = Counter({(ArrIsoType(), ArrIsoType()): 1})
    for f in T.factors():
        part = _census_B(f.b) if f.b else _census_A(f.alpha[0])
        new: Counter = Counter()
        for (l1, c1), m1 in out.items():
            for (l2, c2), m2 in part.items():
                new[(l1 * l2, c1 * c2)] += m1 * m2
        out = new
    return out


def flat_type_census_bruteforce(n: int, kind: str = "B") -> Counter:
    """Same census by walking explicit flats."""
    kind = check_kind(kind)
    out: Counter = Counter()
    if kind == "B":
        for f in flats_B(n):
            out[(localization_type(f), contraction_type(f))] += 1
    else:
        for part in flats_A(n):
            out[(ArrIsoType(0, tuple(len(b) for b in part)), ArrIsoType.type_A(len(part)))] += 1
    return out


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _chi_int(T: ArrIsoType) -> tuple[int, ...]:
    # integer copy of char_poly; Fraction arithmetic dominates otherwise
    roots = [2 * k - 1 for k in range(1, T.b + 1)]
    for a in T.alpha:
        roots += list(range(1, a))
    out = [1]
    for r in roots:
        out = _pmul(out, [-r, 1])
    return tuple(out)


class KLTable:
    """Map from canonical type strings to integer coefficient lists."""

    def __init__(self, entries: dict[str, list[int]] | None = None,
                 version: int = CACHE_VERSION, convention_tag: str = CONVENTION_TAG):
        self.entries: dict[str, tuple[int, ...]] = {k: tuple(v) for k, v in (entries or {}).items()}
        self.version = version
        self.convention_tag = convention_tag

    def __eq__(self, other) -> bool:
        return (isinstance(other, KLTable) and self.entries == other.entries
                and self.version == other.version and self.convention_tag == other.convention_tag)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key) -> bool:
        return str(key) in self.entries

    def to_json(self) -> dict:
        return {"header": {"version": self.version, "convention_tag": self.convention_tag},
                "entries": {k: list(v) for k, v in sorted(self.entries.items())}}

    def store(self, path: str | os.PathLike) -> None:
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            json.dump(self.to_json(), fh, indent=0, sort_keys=True)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "KLTable":
        with open(path) as fh:
            data = json.load(fh)
        header = data.get("header", {})
        if header.get("version") != CACHE_VERSION:
            raise CacheMismatch(f"cache version {header.get('version')!r} != {CACHE_VERSION}")
        if header.get("convention_tag") != CONVENTION_TAG:
            raise CacheMismatch(f"cache convention {header.get('convention_tag')!r} != {CONVENTION_TAG!r}")
        for key in data["entries"]:
            ArrIsoType.parse(key)
        return cls(data["entries"])


def cache_store(table: KLTable, path) -> None:
    table.store(path)


def cache_load(path) -> KLTable:
    return KLTable.load(path)


class KLEngine:
    """Memoized KL recursion over isomorphism types.

    ``recursions`` counts how many types were derived from scratch (as
    opposed to served from the table).
    """

    def __init__(self, table: KLTable | None = None, swap_roles: bool = False, validate: bool = True):
        self.table = table or KLTable()
        self.swap_roles = swap_roles
        self.recursions = 0
        self._lock = threading.Lock()
        self._validated = not validate

    def _get(self, key: str):
        return self.table.entries.get(key)

    def _put(self, key: str, coeffs: tuple[int, ...]) -> None:
        with self._lock:
            self.table.entries.setdefault(key, coeffs)

    def _factor_poly(self, T: ArrIsoType) -> tuple[int, ...]:
        key = str(T)
        hit = self._get(key)
        if hit is not None:
            return hit
        coeffs = self._recurse(T)
        self._put(key, coeffs)
        return coeffs

    def _recurse(self, T: ArrIsoType) -> tuple[int, ...]:
        self.recursions += 1
        r = T.rank
        if r == 0:
            return (1,)
        acc: list[int] = [0]
        for (loc, con), count in flat_type_census(T).items():
            if con == T:
                continue  # bottom flat: P_T itself
            if self.swap_roles:
                loc, con = con, loc
                if con == T:
                    continue
            chi = _chi_int(loc)
            p = list(self.poly_coeffs(con))
            term = _pmul(chi, p)
            if len(term) > len(acc):
                acc += [0] * (len(term) - len(acc))
            for k, c in enumerate(term):
                acc[k] += count * c
        low = [-c for k, c in enumerate(acc) if 2 * k < r]
        while len(low) > 1 and low[-1] == 0:
            low.pop()
        return tuple(low)

    def poly_coeffs(self, T: ArrIsoType) -> tuple[int, ...]:
        """KL coefficients of ``T`` as a tuple of ints (multiplicative over factors)."""
        if not self._validated:
            self._validated = True
            try:
                validate_convention(self)
            except ConventionError:
                self._validated = False
                raise
        key = str(T)
        hit = self._get(key)
        if hit is not None:
            return hit
        out = [1]
        for f in T.factors():
            out = _pmul(out, list(self._factor_poly(f)))
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        coeffs = tuple(out)
        self._put(key, coeffs)
        return coeffs

    def kl_poly(self, T: ArrIsoType) -> Polynomial:
        return Polynomial(self.poly_coeffs(T))

    def kl_poly_direct(self, T: ArrIsoType) -> Polynomial:
        """Run the recursion on ``T`` as a whole, without factorizing it first."""
        return Polynomial(self._recurse(T))

    def dim_D(self, i: int, n: int, kind: str = "B") -> int:
        kind = check_kind(kind)
        T = ArrIsoType(n) if kind == "B" else ArrIsoType.type_A(n)
        c = self.poly_coeffs(T)
        return c[i] if i < len(c) else 0


def validate_convention(engine: KLEngine) -> None:
    """Degree-one check on ``B_3`` and ``B_4`` against explicit flat counts."""
    for n in (3, 4):
        fl = flats_B(n)
        expected = sum(1 for f in fl if f.dim == 1) - sum(1 for f in fl if f.rank == 1)
        got = engine._factor_poly(ArrIsoType(n))
        coeff = got[1] if len(got) > 1 else 0
        if coeff != expected:
            raise ConventionError(
                f"[t] P(B_{n}) = {coeff}, but flats of dimension 1 minus hyperplanes = {expected}")


_DEFAULT: KLEngine | None = None


def default_engine() -> KLEngine:
    """Process-wide engine; preloads the cache named by ``FSBCAT_KL_CACHE`` if set."""
    global _DEFAULT
    if _DEFAULT is None:
        path = os.environ.get("FSBCAT_KL_CACHE")
        table = KLTable.load(path) if path and os.path.exists(path) else None
        _DEFAULT = KLEngine(table)
    return _DEFAULT


def kl_poly(T: ArrIsoType) -> Polynomial:
    return default_engine().kl_poly(T)


def dim_D(i: int, n: int, kind: str = "B") -> int:
    """Coefficient of ``t^i`` in the KL polynomial of ``B_n`` (or ``A`` on ``[n]``)."""
    return default_engine().dim_D(i, n, kind)
