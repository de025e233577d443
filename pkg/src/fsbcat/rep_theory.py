"""Characters of S_n and of the hyperoctahedral groups W_n, exactly.

Conjugacy classes of ``W_n`` are signed cycle types ``(alpha, beta)``:
``alpha`` lists the lengths of positive cycles and ``beta`` those of
negative cycles (a cycle is negative when it flips an odd number of signs).

Irreducibles are labelled by bipartitions ``(lam, mu)`` with
``|lam| + |mu| = n``:

    V_{lam,mu} = Ind_{W_a x W_b}^{W_n} (chi_lam (x) chi_mu * eps),  a = |lam|,

where ``chi_lam`` is pulled back along ``W_a -> S_a`` and
``eps = (-1)^(number of negative cycles)``.  So ``V_{[n], []}`` is trivial
and ``V_{[], [n]}`` is ``eps``.  The table is checked for orthonormality
whenever it is built.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator

from . import limits
from .arrangements import flats_B
from .fsb_core import SignedPerm, hyperoctahedral_order
from .kl_engine import integer_partitions

__all__ = [
    "Bipartition",
    "WClass",
    "ClassFunction",
    "NonIntegralMultiplicity",
    "partitions",
    "bipartitions",
    "w_classes",
    "class_representative",
    "centralizer_order",
    "sym_character",
    "irr_character",
    "character_table",
    "decompose",
    "perm_character",
    "perm_character_flats",
    "projective_character",
    "projective_character_bruteforce",
    "verify_length_bounds",
    "d1_virtual_character",
    "printed_c_lambda",
    "c_lambda_report",
    "decomposition_to_json",
    "character_table_csv",
    "class_size",
    "regular_dimension_identity",
]

Partition = tuple[int, ...]


def partitions(n: int) -> list[Partition]:
    return list(integer_partitions(n))


@dataclass(frozen=True, order=True)
class Bipartition:
    lam: Partition
    mu: Partition

    @property
    def n(self) -> int:
        return sum(self.lam) + sum(self.mu)

    def __str__(self) -> str:
        return f"({_pstr(self.lam)},{_pstr(self.mu)})"


def _pstr(p: Partition) -> str:
    return "[" + ",".join(map(str, p)) + "]"


WClass = tuple[Partition, Partition]


def bipartitions(n: int) -> list[Bipartition]:
    return [Bipartition(lam, mu) for a in range(n, -1, -1)
            for lam in partitions(a) for mu in partitions(n - a)]


def w_classes(n: int) -> list[WClass]:
    """Signed cycle types of ``W_n``, positive part first."""
    return [(alpha, beta) for a in range(n, -1, -1)
            for alpha in partitions(a) for beta in partitions(n - a)]


def centralizer_order(cls: WClass) -> int:
    alpha, beta = cls
    out = 1
    for part in (alpha, beta):
        for k, m in Counter(part).items():
            out *= (2 * k) ** m * factorial(m)
    return out


def class_size(cls: WClass) -> int:
    n = sum(cls[0]) + sum(cls[1])
    return hyperoctahedral_order(n) // centralizer_order(cls)


def class_representative(cls: WClass) -> SignedPerm:
    """Product of consecutive cycles; a negative cycle sends its last element to minus its first."""
    alpha, beta = cls
    n = sum(alpha) + sum(beta)
    images = [0] * n
    start = 1
    for length, sign in [(k, 1) for k in alpha] + [(k, -1) for k in beta]:
        for j in range(start, start + length - 1):
            images[j - 1] = j + 1
        images[start + length - 2] = sign * start
        start += length
    return SignedPerm(tuple(images))


@lru_cache(maxsize=None)
def sym_character(lam: Partition, rho: Partition) -> int:
    """``chi^lam`` of S_n on cycle type ``rho`` (Murnaghan-Nakayama on beta-sets)."""
    if sum(lam) != sum(rho):
        raise ValueError("partitions of different sizes")
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if nb < x < b)
        new_beta = sorted((bset - {b}) | {nb}, reverse=True)
        m = len(new_beta)
        new_lam = tuple(x for x in (new_beta[i] - (m - 1 - i) for i in range(m)) if x > 0)
        total += sign * sym_character(new_lam, rest)
    return total


def _sub_multisets(part: Partition) -> Iterator[tuple[Partition, Partition, int]]:
    """Ways to split the cycles of ``part`` into two groups, with multiplicity."""
    items = sorted(Counter(part).items(), reverse=True)

    def rec(idx):
        if idx == len(items):
            yield (), (), 1
            return
        k, m = items[idx]
        for j in range(m + 1):
            for a, b, w in rec(idx + 1):
                yield (k,) * j + a, (k,) * (m - j) + b, w * comb(m, j)

    yield from rec(0)


def _merge(p: Partition, q: Partition) -> Partition:
    return tuple(sorted(p + q, reverse=True))


@lru_cache(maxsize=None)
def irr_character_value(bp: Bipartition, cls: WClass) -> int:
    a = sum(bp.lam)
    alpha, beta = cls
    total = 0
    for a1, a2, wa in _sub_multisets(alpha):
        for b1, b2, wb in _sub_multisets(beta):
            if sum(a1) + sum(b1) != a:
                continue
            total += (wa * wb * sym_character(bp.lam, _merge(a1, b1))
                      * sym_character(bp.mu, _merge(a2, b2)) * (-1) ** len(b2))
    return total


class NonIntegralMultiplicity(ArithmeticError):
    """A class function is not a virtual character."""


class ClassFunction:
    """Rational-valued class function on ``W_n``, keyed by signed cycle type."""

    def __init__(self, n: int, values: dict[WClass, Fraction | int]):
        self.n = n
        self.values = {c: Fraction(values.get(c, 0)) for c in w_classes(n)}

    @classmethod
    def from_function(cls, n: int, f: Callable[[WClass], int | Fraction]) -> "ClassFunction":
        return cls(n, {c: f(c) for c in w_classes(n)})

    def __getitem__(self, c: WClass) -> Fraction:
        return self.values[c]

    def _check(self, other: "ClassFunction") -> None:
        if self.n != other.n:
            raise ValueError("class functions on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, {c: v + other.values[c] for c, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, {c: v - other.values[c] for c, v in self.values.items()})

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {c: v * other.values[c] for c, v in self.values.items()})
        return ClassFunction(self.n, {c: v * other for c, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def inner(self, other: "ClassFunction") -> Fraction:
        self._check(other)
        total = sum((class_size(c) * v * other.values[c] for c, v in self.values.items()), Fraction(0))
        return total / hyperoctahedral_order(self.n)

    @property
    def dimension(self) -> Fraction:
        return self.values[((1,) * self.n, ())]


def irr_character(bp: Bipartition) -> ClassFunction:
    return ClassFunction.from_function(bp.n, lambda c: irr_character_value(bp, c))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Bipartition, ClassFunction]:
    """All irreducible characters of ``W_n``; orthonormality is asserted on build."""
    limits.check("characters", n)
    table = {bp: irr_character(bp) for bp in bipartitions(n)}
    labels = list(table)
    for i, x in enumerate(labels):
        for y in labels[i:]:
            if table[x].inner(table[y]) != (1 if x == y else 0):
                raise AssertionError(f"characters {x} and {y} are not orthonormal")
    return table


def decompose(chi: ClassFunction) -> dict[Bipartition, int]:
    """Multiplicities of the irreducibles in ``chi`` (zero ones dropped)."""
    out = {}
    for bp, irr in character_table(chi.n).items():
        m = chi.inner(irr)
        if m.denominator != 1:
            raise NonIntegralMultiplicity(f"multiplicity of {bp} is {m}")
        if m:
            out[bp] = int(m)
    return out


def perm_character(n: int, points, action: Callable) -> ClassFunction:
    """Character of the permutation representation on ``points`` (``action(w, x)``)."""
    pts = list(points)
    return ClassFunction.from_function(
        n, lambda c: sum(1 for x in pts if action(class_representative(c), x) == x))


def perm_character_flats(n: int, dim: int) -> ClassFunction:
    """Permutation character of ``W_n`` on the flats of ``B_n`` of dimension ``dim``."""
    return perm_character(n, [f for f in flats_B(n) if f.dim == dim], lambda w, f: f.act(w))


def projective_character(n: int, d: int) -> ClassFunction:
    """Character of ``W_n`` on ``Hom([-n, n], [-d, d])`` by precomposition.

    ``phi o w = phi`` forces ``phi`` to vanish on negative cycles and to be
    constant on each positive cycle, so surjective fixed maps are counted by
    inclusion-exclusion in the number of positive cycles.
    """
    def value(c: WClass) -> int:
        p = len(c[0])
        return sum((-1) ** j * comb(d, j) * (2 * (d - j) + 1) ** p for j in range(d + 1))

    return ClassFunction.from_function(n, value)


def projective_character_bruteforce(n: int, d: int) -> ClassFunction:
    from .fsb_core import act, enumerate_hom

    return perm_character(n, enumerate_hom(n, d), act)


def verify_length_bounds(chi: ClassFunction, d: int) -> list[Bipartition]:
    """Constituents violating ``l(lam) <= d + 1`` or ``l(mu) <= d``; empty means all pass."""
    return [bp for bp in decompose(chi) if len(bp.lam) > d + 1 or len(bp.mu) > d]


def d1_virtual_character(n: int) -> ClassFunction:
    """Flats of dimension 1 minus hyperplanes, as a virtual character of ``W_n``."""
    if n == 0:
        return ClassFunction(0, {})
    return perm_character_flats(n, 1) - perm_character_flats(n, n - 1)


def printed_c_lambda(lam: Partition, n: int) -> int | None:
    """The multiplicity table printed for ``D^1`` (``None`` for ``lam`` empty, where it is undefined)."""
    if not lam:
        return None
    half = lam[0] // 2
    if lam in ((n,), (n - 1, 1)):
        return half - 1
    if lam in ((n - 2, 2), (n - 2,)):
        return half
    return half + 1


def _dim_irr(bp: Bipartition) -> int:
    return irr_character_value(bp, ((1,) * bp.n, ()))


def c_lambda_report(n: int) -> dict:
    """Computed decomposition of ``D^1`` at ``n`` next to the printed table."""
    actual = decompose(d1_virtual_character(n))
    rows = []
    table_dim = 0
    undefined = False
    for a in range(n, -1, -1):
        for lam in partitions(a):
            if len(lam) > 2:
                continue
            bp = Bipartition(lam, (n - a,) if n - a else ())
            printed = printed_c_lambda(lam, n)
            if printed is None:
                undefined = True
            else:
                table_dim += printed * _dim_irr(bp)
            rows.append({"lambda": list(lam), "mu": list(bp.mu), "computed": actual.get(bp, 0),
                         "printed": printed})
    others = {str(bp): m for bp, m in actual.items()
              if not (len(bp.lam) <= 2 and len(bp.mu) <= 1)}
    return {
        "n": n,
        "dimension": (3 ** n - 1) // 2 - n * n,
        "computed_dimension": sum(m * _dim_irr(bp) for bp, m in actual.items()),
        "printed_table_dimension": table_dim,
        "printed_table_has_undefined_entry": undefined,
        "rows": rows,
        "constituents_outside_shape": others,
        "agrees": all(r["printed"] == r["computed"] for r in rows) and not others,
    }


def decomposition_to_json(dec: dict[Bipartition, int]) -> str:
    return json.dumps([{"lambda": list(bp.lam), "mu": list(bp.mu), "mult": m}
                       for bp, m in sorted(dec.items(), reverse=True)])


def character_table_csv(n: int) -> str:
    classes = w_classes(n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["irrep"] + [f"{_pstr(a)}|{_pstr(b)}" for a, b in classes])
    for bp, chi in character_table(n).items():
        writer.writerow([str(bp)] + [str(chi[c]) for c in classes])
    return buf.getvalue()


def regular_dimension_identity(n: int) -> bool:
    """Sum of squared irreducible dimensions equals ``|W_n|``."""
    return sum(_dim_irr(bp) ** 2 for bp in bipartitions(n)) == hyperoctahedral_order(n)
