"""Objects and morphisms of the surjection categories FS_A and FS_B.

Every FS_B object is stored in its canonical model ``[-n, n]`` with the
involution ``k -> -k``.  A morphism ``[-n, n] -> [-d, d]`` is determined by
the images of ``1, ..., n``; equivariance (``phi(-i) = -phi(i)``,
``phi(0) = 0``) is built into the representation and never checked.

The number of equivariant maps ``[-n, n] -> [-d, d]`` is ``(2d + 1)^n``
(each positive element may go anywhere in ``[-d, d]``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "ShapeError",
    "AObject",
    "BObject",
    "BMorphism",
    "ASurjection",
    "SignedPerm",
    "compose",
    "identity",
    "enumerate_hom",
    "hom_count",
    "equivariant_map_count",
    "orbit_classes",
    "canonical_orbit_rep",
    "act",
    "post_act",
    "fiber_profile",
    "stabilizer_order",
    "signed_perms",
    "hyperoctahedral_order",
    "enumerate_surjections",
    "surjection_count",
]


class ShapeError(ValueError):
    """Morphisms or group elements of mismatched sizes."""


@dataclass(frozen=True)
class AObject:
    """The finite set ``[n] = {1, ..., n}``."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("FS_A objects are nonempty")


@dataclass(frozen=True)
class BObject:
    """``[-n, n]`` with involution ``k -> -k``; ``n`` counts the free orbits."""

    free_orbits: int

    def __post_init__(self):
        if self.free_orbits < 0:
            raise ValueError("number of free orbits must be >= 0")

    @property
    def elements(self) -> tuple[int, ...]:
        n = self.free_orbits
        return tuple(range(-n, n + 1))

    @classmethod
    def from_involution(cls, elements: Sequence, sigma: dict) -> tuple["BObject", dict]:
        """Normalize an arbitrary ``(E, sigma)``.

        Returns the canonical object and the relabeling ``E -> [-n, n]``.  The
        elements of ``E`` are relabeled in their given order: the first
        element of each free orbit becomes positive.
        """
        fixed = [e for e in elements if sigma[e] == e]
        if len(fixed) != 1:
            raise ValueError("involution must have exactly one fixed point")
        if any(sigma[sigma[e]] != e for e in elements):
            raise ValueError("sigma is not an involution")
        label = {fixed[0]: 0}
        k = 0
        for e in elements:
            if e not in label:
                k += 1
                label[e] = k
                label[sigma[e]] = -k
        return cls(k), label


def _signed(images: Sequence[int], i: int) -> int:
    if i == 0:
        return 0
    v = images[abs(i) - 1]
    return v if i > 0 else -v


@dataclass(frozen=True)
class BMorphism:
    """Equivariant surjection ``[-source_n, source_n] -> [-target_d, target_d]``.

    ``images[i - 1]`` is the image of ``i`` for ``i = 1..source_n``.
    """

    source_n: int
    target_d: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.source_n:
            raise ShapeError(f"expected {self.source_n} images, got {len(self.images)}")
        d = self.target_d
        if any(abs(x) > d for x in self.images):
            raise ValueError(f"image out of range [-{d}, {d}]")
        hit = {abs(x) for x in self.images}
        if any(k not in hit for k in range(1, d + 1)):
            raise ValueError(f"not surjective onto [-{d}, {d}]: {self.images}")

    def __call__(self, i: int) -> int:
        if abs(i) > self.source_n:
            raise ValueError(f"{i} not in [-{self.source_n}, {self.source_n}]")
        return _signed(self.images, i)

    def preimage(self, e: int) -> frozenset[int]:
        """Full preimage of ``e`` inside ``[-n, n]``."""
        n = self.source_n
        return frozenset(i for i in range(-n, n + 1) if self(i) == e)

    def to_json(self) -> str:
        return json.dumps({"source_n": self.source_n, "target_d": self.target_d, "images": list(self.images)})

    @classmethod
    def from_json(cls, text: str | dict) -> "BMorphism":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(data["source_n"], data["target_d"], tuple(data["images"]))

    def __str__(self) -> str:
        return f"[-{self.source_n},{self.source_n}]->[-{self.target_d},{self.target_d}] {list(self.images)}"


def identity(n: int) -> BMorphism:
    return BMorphism(n, n, tuple(range(1, n + 1)))


def compose(psi: BMorphism, phi: BMorphism) -> BMorphism:
    """``psi o phi`` (apply ``phi`` first)."""
    if phi.target_d != psi.source_n:
        raise ShapeError(f"cannot compose: target [-{phi.target_d},{phi.target_d}] "
                         f"!= source [-{psi.source_n},{psi.source_n}]")
    return BMorphism(phi.source_n, psi.target_d, tuple(psi(x) for x in phi.images))


def equivariant_map_count(n: int, d: int) -> int:
    return (2 * d + 1) ** n


def hom_count(n: int, d: int) -> int:
    """``|Hom([-n, n], [-d, d])|`` by inclusion-exclusion over missed orbits."""
    return sum((-1) ** j * comb(d, j) * (2 * (d - j) + 1) ** n for j in range(d + 1))


def enumerate_hom(n: int, d: int) -> list[BMorphism]:
    """All morphisms ``[-n, n] -> [-d, d]`` in lexicographic order of images."""
    if d > n:
        return []
    out = []
    for imgs in product(range(-d, d + 1), repeat=n):
        hit = {abs(x) for x in imgs}
        if all(k in hit for k in range(1, d + 1)):
            out.append(BMorphism(n, d, imgs))
    return out


def canonical_orbit_rep(phi: BMorphism) -> BMorphism:
    """Representative of the ``W_d``-orbit of ``phi`` under post-composition.

    Target orbits are renumbered in order of first appearance among
    ``phi(1), phi(2), ...`` and each is signed so that its first appearance is
    positive.  The result is the unique member of the orbit satisfying the
    ordered-surjection conditions.
    """
    relabel: dict[int, int] = {}
    out = []
    for x in phi.images:
        if x == 0:
            out.append(0)
            continue
        a = abs(x)
        if a not in relabel:
            relabel[a] = (len(relabel) + 1) * (1 if x > 0 else -1)
        r = relabel[a]
        out.append(r if x > 0 else -r)
    return BMorphism(phi.source_n, phi.target_d, tuple(out))


def orbit_classes(n: int, d: int) -> list[BMorphism]:
    """One morphism per ``W_d``-orbit of ``Hom([-n, n], [-d, d])``, sorted."""
    reps = {canonical_orbit_rep(phi) for phi in enumerate_hom(n, d)}
    return sorted(reps, key=lambda p: p.images)


@dataclass(frozen=True)
class SignedPerm:
    """Element of ``W_n``: ``images[i - 1] = w(i)``, a signed permutation of ``[n]``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return _signed(self.images, i)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """``self * other`` applies ``other`` first."""
        if self.n != other.n:
            raise ShapeError("signed permutations of different sizes")
        return SignedPerm(tuple(self(x) for x in other.images))

    def inverse(self) -> "SignedPerm":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return SignedPerm(tuple(inv))

    def signed_cycle_type(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(positive cycle lengths, negative cycle lengths), each sorted descending."""
        seen = set()
        pos, neg = [], []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length, sign, cur = 0, 1, start
            while True:
                seen.add(cur)
                img = self.images[cur - 1]
                sign *= 1 if img > 0 else -1
                cur = abs(img)
                length += 1
                if cur == start:
                    break
            (pos if sign > 0 else neg).append(length)
        return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))

    def as_morphism(self) -> BMorphism:
        return BMorphism(self.n, self.n, self.images)


def hyperoctahedral_order(n: int) -> int:
    return 2 ** n * factorial(n)


def signed_perms(n: int) -> Iterator[SignedPerm]:
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPerm(tuple(s * p for s, p in zip(signs, perm)))


def act(w: SignedPerm, phi: BMorphism) -> BMorphism:
    """Precomposition ``phi o w``; a right action of ``W_n``."""
    if w.n != phi.source_n:
        raise ShapeError("signed permutation and morphism source differ in size")
    return BMorphism(phi.source_n, phi.target_d, tuple(phi(x) for x in w.images))


def post_act(g: SignedPerm, phi: BMorphism) -> BMorphism:
    """Post-composition ``g o phi`` by ``g`` in ``W_d``."""
    if g.n != phi.target_d:
        raise ShapeError("signed permutation and morphism target differ in size")
    return BMorphism(phi.source_n, phi.target_d, tuple(g(x) for x in phi.images))


def fiber_profile(phi: BMorphism) -> tuple[int, ...]:
    """``(z, b_1, ..., b_d)``: free orbits over 0, then over each target orbit."""
    prof = [0] * (phi.target_d + 1)
    for x in phi.images:
        prof[abs(x)] += 1
    return tuple(prof)


def stabilizer_order(phi: BMorphism) -> int:
    """``|{w in W_n : phi o w = phi}| = 2^z z! prod b_k!``."""
    z, *bs = fiber_profile(phi)
    out = 2 ** z * factorial(z)
    for b in bs:
        out *= factorial(b)
    return out


@dataclass(frozen=True)
class ASurjection:
    """Surjection ``[n] -> [m]``; ``images[i - 1]`` is the image of ``i``."""

    source_n: int
    target_m: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.source_n:
            raise ShapeError(f"expected {self.source_n} images")
        if set(self.images) != set(range(1, self.target_m + 1)):
            raise ValueError(f"not a surjection onto [{self.target_m}]: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose_after(self, phi: "ASurjection") -> "ASurjection":
        """``self o phi``."""
        if phi.target_m != self.source_n:
            raise ShapeError("cannot compose surjections")
        return ASurjection(phi.source_n, self.target_m, tuple(self(x) for x in phi.images))


def enumerate_surjections(n: int, m: int) -> list[ASurjection]:
    if m > n or m < 1:
        return []
    return [ASurjection(n, m, imgs) for imgs in product(range(1, m + 1), repeat=n)
            if len(set(imgs)) == m]


def surjection_count(n: int, m: int) -> int:
    return sum((-1) ** j * comb(m, j) * (m - j) ** n for j in range(m + 1))
