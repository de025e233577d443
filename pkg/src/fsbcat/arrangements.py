"""Type A and type B Coxeter arrangements, handled combinatorially.

A flat of the B_n arrangement is recorded by a *zero block* (coordinates
forced to vanish) and a set of *signed blocks*: within a block all
coordinates agree up to the recorded signs.  The smallest element of each
block is stored with a ``+`` sign.  Type A flats (for the arrangement of a
set of size ``a``) are set partitions of ``[a]``.

Isomorphism types closed under contraction and localization are
``B_b x prod A_{a_i - 1}``, stored as :class:`ArrIsoType`.  Type D is not
closed under contraction and is rejected.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from . import limits
from ._linalg import RowSpace
from .fsb_core import BMorphism, SignedPerm
from .series import Polynomial

__all__ = [
    "UnsupportedArrangement",
    "check_kind",
    "ArrIsoType",
    "FlatDescriptor",
    "set_partitions",
    "flats_B",
    "flats_A",
    "contraction_type",
    "localization_type",
    "char_poly",
    "os_hilbert",
    "Hyperplane",
    "hyperplanes",
    "GeometricLatticeSlice",
    "mobius_oracle",
]


class UnsupportedArrangement(ValueError):
    pass


def check_kind(kind: str) -> str:
    k = kind.upper()
    if k == "D":
        raise UnsupportedArrangement(
            "type D arrangements are not closed under contraction; only types A and B are supported")
    if k not in ("A", "B"):
        raise UnsupportedArrangement(f"unknown arrangement type {kind!r}")
    return k


_TYPE_RE = re.compile(r"^([AB])(\d+)$")


@dataclass(frozen=True, order=True)
class ArrIsoType:
    """``B_b x prod_i A(alpha_i)`` where ``A(a)`` is the arrangement of an ``a``-set.

    ``A(a)`` has Coxeter type ``A_{a-1}``; sizes equal to 1 give empty
    factors and are dropped.  The canonical string uses Coxeter labels,
    e.g. ``B3*A2*A1`` for ``b = 3``, ``alpha = (3, 2)``; the empty type is
    ``B0``.
    """

    b: int = 0
    alpha: tuple[int, ...] = ()

    def __post_init__(self):
        if self.b < 0 or any(a < 1 for a in self.alpha):
            raise ValueError("invalid isomorphism type")
        object.__setattr__(self, "alpha", tuple(sorted((a for a in self.alpha if a > 1), reverse=True)))

    @property
    def rank(self) -> int:
        return self.b + sum(a - 1 for a in self.alpha)

    def is_empty(self) -> bool:
        return self.rank == 0

    def __mul__(self, other: "ArrIsoType") -> "ArrIsoType":
        # a product has at most one B factor in this closed class
        if self.b and other.b:
            raise ValueError("product of two B factors is outside the A/B class")
        return ArrIsoType(self.b + other.b, self.alpha + other.alpha)

    def factors(self) -> list["ArrIsoType"]:
        out = [ArrIsoType(self.b)] if self.b else []
        return out + [ArrIsoType(0, (a,)) for a in self.alpha]

    def __str__(self) -> str:
        parts = [f"B{self.b}"] if self.b else []
        parts += [f"A{a - 1}" for a in self.alpha]
        return "*".join(parts) if parts else "B0"

    @classmethod
    def parse(cls, text: str) -> "ArrIsoType":
        b, alpha = 0, []
        for tok in text.replace(" ", "").split("*"):
            m = _TYPE_RE.match(tok)
            if not m:
                raise ValueError(f"cannot parse arrangement type {text!r}")
            if m.group(1) == "B":
                if b:
                    raise ValueError("at most one B factor")
                b = int(m.group(2))
            else:
                alpha.append(int(m.group(2)) + 1)
        return cls(b, tuple(alpha))

    @classmethod
    def type_A(cls, size: int) -> "ArrIsoType":
        """Arrangement of a ``size``-element set (Coxeter ``A_{size-1}``)."""
        return cls(0, (size,))


@dataclass(frozen=True)
class FlatDescriptor:
    """Flat of the B_n arrangement: zero block plus signed blocks.

    ``blocks`` is a sorted tuple of blocks; each block is a tuple of signed
    elements sorted by absolute value with the first one positive.  Two
    coordinates ``|x|, |y|`` in one block satisfy ``x_|x| * sign(x) =
    x_|y| * sign(y)`` on the flat.
    """

    n: int
    zero_block: frozenset = field(default_factory=frozenset)
    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        zb = frozenset(int(x) for x in self.zero_block)
        canon = []
        for blk in self.blocks:
            blk = sorted((int(x) for x in blk), key=abs)
            s = 1 if blk[0] > 0 else -1
            canon.append(tuple(s * x for x in blk))
        canon.sort(key=lambda blk: abs(blk[0]))
        object.__setattr__(self, "zero_block", zb)
        object.__setattr__(self, "blocks", tuple(canon))
        used = sorted(list(zb) + [abs(x) for blk in canon for x in blk])
        if used != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [{self.n}]")

    @property
    def dim(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    @classmethod
    def from_morphism(cls, phi: BMorphism) -> "FlatDescriptor":
        """The flat cut out by all ``J_ef`` with ``phi(e) = phi(f)``."""
        zero = [i for i, x in enumerate(phi.images, start=1) if x == 0]
        groups: dict[int, list[int]] = {}
        for i, x in enumerate(phi.images, start=1):
            if x:
                groups.setdefault(abs(x), []).append(i if x > 0 else -i)
        return cls(phi.source_n, frozenset(zero), tuple(tuple(g) for g in groups.values()))

    def to_morphism(self) -> BMorphism:
        """Canonical morphism onto ``[-dim, dim]`` whose flat is this one."""
        imgs = [0] * self.n
        for k, blk in enumerate(self.blocks, start=1):
            for x in blk:
                imgs[abs(x) - 1] = k if x > 0 else -k
        return BMorphism(self.n, self.dim, tuple(imgs))

    def contains(self, h: "Hyperplane") -> bool:
        """Whether the flat lies inside hyperplane ``h``."""
        zero = self.zero_block
        where = {}
        for k, blk in enumerate(self.blocks):
            for x in blk:
                where[abs(x)] = (k, 1 if x > 0 else -1)
        if h.kind == "zero":
            return h.e in zero
        if h.e in zero and h.f in zero:
            return True
        if h.e in zero or h.f in zero:
            return False
        (ke, se), (kf, sf) = where[h.e], where[h.f]
        if ke != kf:
            return False
        return (se == sf) if h.kind == "diff" else (se != sf)

    def act(self, w: SignedPerm) -> "FlatDescriptor":
        """Image of the flat under ``w`` (coordinate ``i`` goes to ``w(i)``)."""
        zero = frozenset(abs(w(i)) for i in self.zero_block)
        blocks = tuple(tuple(w(x) for x in blk) for blk in self.blocks)
        return FlatDescriptor(self.n, zero, blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "zero_block": sorted(self.zero_block),
                "blocks": [[abs(x) for x in blk] for blk in self.blocks],
                "signs": [[1 if x > 0 else -1 for x in blk] for blk in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "FlatDescriptor":
        blocks = tuple(tuple(s * x for x, s in zip(blk, sg)) for blk, sg in zip(data["blocks"], data["signs"]))
        return cls(data["n"], frozenset(data["zero_block"]), blocks)


def set_partitions(items: Sequence) -> Iterator[tuple[tuple, ...]]:
    """Set partitions of ``items`` (restricted growth order), blocks in item order."""
    items = list(items)
    if not items:
        yield ()
        return

    def rec(i: int, blocks: list[list]):
        if i == len(items):
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def flats_B(n: int) -> list[FlatDescriptor]:
    """All flats of the B_n arrangement.

    Order: by size of the zero block, then the zero block itself, then the
    partition of the remaining coordinates, then the sign patterns.
    """
    limits.check("flats_B", n)
    out = []
    ground = list(range(1, n + 1))
    for z in range(n + 1):
        for zero in combinations(ground, z):
            rest = [i for i in ground if i not in zero]
            for part in set_partitions(rest):
                tails = [len(blk) - 1 for blk in part]
                for signs in product((1, -1), repeat=sum(tails)):
                    it = iter(signs)
                    blocks = tuple((blk[0],) + tuple(next(it) * x for x in blk[1:]) for blk in part)
                    out.append(FlatDescriptor(n, frozenset(zero), blocks))
    return out


def flats_A(size: int) -> list[tuple[tuple[int, ...], ...]]:
    """Flats of the arrangement of ``[size]``: set partitions of ``[size]``."""
    return list(set_partitions(range(1, size + 1)))


def contraction_type(f: FlatDescriptor) -> ArrIsoType:
    return ArrIsoType(len(f.blocks))


def localization_type(f: FlatDescriptor) -> ArrIsoType:
    return ArrIsoType(len(f.zero_block), tuple(len(blk) for blk in f.blocks))


@lru_cache(maxsize=None)
def _chi_B(b: int) -> Polynomial:
    p = Polynomial([1])
    for k in range(1, b + 1):
        p = p * Polynomial([-(2 * k - 1), 1])
    return p


@lru_cache(maxsize=None)
def _chi_A(a: int) -> Polynomial:
    p = Polynomial([1])
    for k in range(1, a):
        p = p * Polynomial([-k, 1])
    return p


def char_poly(T: ArrIsoType) -> Polynomial:
    """Characteristic polynomial, multiplicative over factors."""
    p = _chi_B(T.b)
    for a in T.alpha:
        p = p * _chi_A(a)
    return p


def os_hilbert(T: ArrIsoType) -> Polynomial:
    """Poincare polynomial ``(-t)^r chi(-1/t)`` of the Orlik-Solomon algebra."""
    chi = char_poly(T)
    r = T.rank
    return Polynomial((-1) ** r * (-1) ** k * chi[k] for k in range(r, -1, -1))


@dataclass(frozen=True)
class Hyperplane:
    """Reflecting hyperplane ``x_e = 0`` (``zero``), ``x_e = x_f`` (``diff``) or ``x_e = -x_f`` (``sum``)."""

    kind: str
    e: int
    f: int = 0

    def label(self) -> tuple[int, int]:
        """Pair ``(e, f)`` of signed elements naming the hyperplane ``J_ef``."""
        if self.kind == "zero":
            return (self.e, 0)
        return (self.e, self.f) if self.kind == "diff" else (self.e, -self.f)

    def normal(self, dim: int, offset: int = 1) -> tuple[int, ...]:
        v = [0] * dim
        v[self.e - offset] = 1
        if self.kind == "diff":
            v[self.f - offset] = -1
        elif self.kind == "sum":
            v[self.f - offset] = 1
        return tuple(v)

    def __str__(self) -> str:
        e, f = self.label()
        return f"J({e},{f})"


@lru_cache(maxsize=None)
def hyperplanes(n: int, kind: str = "B") -> tuple[Hyperplane, ...]:
    """Hyperplanes in the fixed order used throughout.

    Type B: ``x_e = 0`` for ``e = 1..n``, then ``x_e = x_f`` for ``e < f``,
    then ``x_e = -x_f`` for ``e < f``.  Type A on ``[n]``: ``x_e = x_f`` for
    ``e < f`` in lexicographic order.
    """
    kind = check_kind(kind)
    pairs = list(combinations(range(1, n + 1), 2))
    if kind == "A":
        return tuple(Hyperplane("diff", e, f) for e, f in pairs)
    return (tuple(Hyperplane("zero", e) for e in range(1, n + 1))
            + tuple(Hyperplane("diff", e, f) for e, f in pairs)
            + tuple(Hyperplane("sum", e, f) for e, f in pairs))


def ambient_dim(n: int, kind: str) -> int:
    """Dimension of the space the arrangement lives in."""
    return n - 1 if check_kind(kind) == "A" else n


@dataclass
class GeometricLatticeSlice:
    """Explicit lattice of flats, each flat given by the hyperplanes containing it."""

    n: int
    kind: str
    flats: list[frozenset]
    ranks: list[int]
    mobius: list[int]

    def leq(self, i: int, j: int) -> bool:
        """Flat ``i`` lies below flat ``j`` (``j`` is contained in more hyperplanes)."""
        return self.flats[i] <= self.flats[j]

    def char_poly(self) -> Polynomial:
        d = ambient_dim(self.n, self.kind)
        out = Polynomial()
        for r, mu in zip(self.ranks, self.mobius):
            out = out + Polynomial.monomial(d - r, mu)
        return out

    def whitney_counts(self) -> list[int]:
        c = Counter(self.ranks)
        return [c[r] for r in range(max(self.ranks) + 1)]


def mobius_oracle(n: int, kind: str = "B") -> GeometricLatticeSlice:
    """Lattice of flats by intersecting hyperplanes with exact linear algebra."""
    kind = check_kind(kind)
    limits.check("mobius", n)
    hs = hyperplanes(n, kind)
    dim = n
    normals = [h.normal(dim) for h in hs]

    def closure(space: RowSpace) -> frozenset:
        return frozenset(i for i, v in enumerate(normals) if space.contains(v))

    bottom = frozenset()
    spaces = {bottom: RowSpace(dim)}
    ranks = {bottom: 0}
    frontier = [bottom]
    while frontier:
        nxt = []
        for fl in frontier:
            for i in range(len(hs)):
                if i in fl:
                    continue
                sp = spaces[fl].copy()
                sp.add(normals[i])
                new = closure(sp)
                if new not in spaces:
                    spaces[new] = sp
                    ranks[new] = sp.rank
                    nxt.append(new)
        frontier = nxt
    flats = sorted(spaces, key=lambda s: (ranks[s], sorted(s)))
    mob: dict[frozenset, int] = {}
    for fl in flats:
        mob[fl] = 1 if not fl else -sum(mob[g] for g in flats if ranks[g] < ranks[fl] and g < fl)
    return GeometricLatticeSlice(n, kind, flats, [ranks[f] for f in flats], [mob[f] for f in flats])


def flat_to_json(flats: Sequence[FlatDescriptor]) -> str:
    return json.dumps([f.to_json() for f in flats])
