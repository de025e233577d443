"""Orlik-Solomon algebras of the type A and type B arrangements at small size.

Each graded piece is given by its no-broken-circuit (NBC) basis for the
hyperplane order of :func:`fsbcat.arrangements.hyperplanes`.  Arbitrary
monomials are rewritten into that basis with the relations
``d(u_C) = 0`` for circuits ``C``.  A surjection induces the map
``S(A) -> S(A^F)`` sending ``u_H`` to ``u_{F cap H}`` (or to zero when the
flat lies in ``H``); these matrices and their transposes are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from . import limits
from ._linalg import RowSpace, solve_in_basis
from .arrangements import ArrIsoType, Hyperplane, check_kind, hyperplanes, os_hilbert
from .fsb_core import ASurjection, BMorphism, orbit_classes

__all__ = [
    "OSAlgebraModel",
    "GradedMap",
    "build_os",
    "restriction_map",
    "dual_map",
    "spanning_check",
    "psi_morphisms",
    "dual_vector",
    "pullback",
]


def _sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    arr = list(seq)
    if len(set(arr)) != len(arr):
        return 0, ()
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


class OSAlgebraModel:
    """NBC model of the Orlik-Solomon algebra of ``A_{[n]}`` or ``B_n``.

    ``n`` is the number of points for type A and the number of free orbits
    for type B.
    """

    def __init__(self, n: int, kind: str = "B", max_degree: int | None = None):
        self.kind = check_kind(kind)
        limits.check("os_" + self.kind, n)
        self.n = n
        self.hyperplanes: tuple[Hyperplane, ...] = hyperplanes(n, self.kind)
        self.normals = [h.normal(n) for h in self.hyperplanes]
        self._index = {h: k for k, h in enumerate(self.hyperplanes)}
        self.rank = n - 1 if self.kind == "A" else n
        if n == 0:
            self.rank = 0
        self.max_degree = self.rank if max_degree is None else min(max_degree, self.rank)
        self.nbc: list[list[tuple[int, ...]]] = self._build_nbc()
        self.basis_index = [{s: k for k, s in enumerate(level)} for level in self.nbc]
        self._reduce_cache: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}

    def __repr__(self) -> str:
        return f"OSAlgebraModel(n={self.n}, kind={self.kind!r}, dims={self.dims})"

    @property
    def dims(self) -> list[int]:
        return [len(level) for level in self.nbc]

    def iso_type(self) -> ArrIsoType:
        return ArrIsoType(self.n) if self.kind == "B" else ArrIsoType.type_A(max(self.n, 1))

    def _span(self, idxs) -> RowSpace:
        return RowSpace(self.n, (self.normals[k] for k in idxs))

    def _build_nbc(self) -> list[list[tuple[int, ...]]]:
        levels: list[list[tuple[int, ...]]] = [[()]]
        # grow NBC sets downward: prepend s < min(tail), keeping min(cl) = s
        frontier = [((), RowSpace(self.n))]
        for _deg in range(1, self.max_degree + 1):
            nxt = []
            for tail, space in frontier:
                top = tail[0] if tail else len(self.hyperplanes)
                for s in range(top):
                    if space.contains(self.normals[s]):
                        continue
                    sp = space.copy()
                    sp.add(self.normals[s])
                    if any(sp.contains(self.normals[h]) for h in range(s)):
                        continue
                    nxt.append(((s,) + tail, sp))
            levels.append(sorted(t for t, _ in nxt))
            frontier = nxt
        return levels

    def is_dependent(self, idxs: Sequence[int]) -> bool:
        return self._span(idxs).rank < len(set(idxs))

    def hyperplane_index(self, a: int, b: int) -> int:
        """Index of the hyperplane ``J_ab`` (type B, signed ``a != b``) or ``H_ab`` (type A)."""
        if a == b:
            raise ValueError("J_ee is not a hyperplane")
        if self.kind == "A":
            e, f = sorted((a, b))
            return self._index[Hyperplane("diff", e, f)]
        if b == 0 or a == -b:
            return self._index[Hyperplane("zero", abs(a) or abs(b))]
        if a == 0:
            return self._index[Hyperplane("zero", abs(b))]
        e, f = sorted((abs(a), abs(b)))
        kind = "diff" if (a > 0) == (b > 0) else "sum"
        return self._index[Hyperplane(kind, e, f)]

    def _broken_circuit(self, s: tuple[int, ...]) -> tuple[int, ...] | None:
        """A circuit ``C`` with ``C - min C`` inside ``s``, or None if ``s`` is NBC."""
        for j in range(len(s)):
            tail = s[j:]
            space = self._span(tail)
            for h in range(s[j]):
                if space.contains(self.normals[h]):
                    coeffs = solve_in_basis([self.normals[t] for t in tail], self.normals[h])
                    support = tuple(t for t, c in zip(tail, coeffs) if c)
                    return (h,) + support
        return None

    def reduce(self, monomial: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """Express ``u_{h_1} ... u_{h_k}`` (in the given order) in the NBC basis."""
        sign, s = _sort_sign(monomial)
        if sign == 0:
            return {}
        base = self._reduce_sorted(s)
        return {k: sign * v for k, v in base.items()}

    def _reduce_sorted(self, s: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        if s in self._reduce_cache:
            return self._reduce_cache[s]
        if len(s) <= self.max_degree and s in self.basis_index[len(s)]:
            out = {s: Fraction(1)}
        elif self.is_dependent(s):
            out = {}
        else:
            circ = self._broken_circuit(s)
            assert circ is not None, "independent non-NBC set without broken circuit"
            out = {}
            bc = circ[1:]
            rest = tuple(x for x in s if x not in bc)
            eps, _ = _sort_sign(bc + rest)
            # u_bc = sum_{i>=1} (-1)^(i+1) u_{circ - circ[i]}
            for i in range(1, len(circ)):
                term = circ[:i] + circ[i + 1:]
                sg, srt = _sort_sign(term + rest)
                if sg == 0:
                    continue
                coef = eps * (-1) ** (i + 1) * sg
                for k, v in self._reduce_sorted(srt).items():
                    out[k] = out.get(k, 0) + coef * v
            out = {k: Fraction(v) for k, v in out.items() if v}
        self._reduce_cache[s] = out
        return out

    def boundary(self, dep: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
        """``d(u_D)`` written in the NBC basis (zero for dependent ``D``)."""
        out: dict[tuple[int, ...], Fraction] = {}
        for i in range(len(dep)):
            term = tuple(dep[:i]) + tuple(dep[i + 1:])
            for k, v in self.reduce(term).items():
                out[k] = out.get(k, 0) + (-1) ** (i + 1) * v
        return {k: v for k, v in out.items() if v}

    def basis_labels(self, degree: int) -> list[list[tuple[int, int]]]:
        return [[self.hyperplanes[k].label() for k in s] for s in self.nbc[degree]]


@lru_cache(maxsize=None)
def build_os(n: int, kind: str = "B", max_degree: int | None = None) -> OSAlgebraModel:
    """Cached :class:`OSAlgebraModel`."""
    return OSAlgebraModel(n, kind, max_degree)


@dataclass(frozen=True, eq=False)
class GradedMap:
    """Degree-``degree`` linear map given by an exact matrix.

    Rows index the target basis and columns the source basis.  For a dual
    map (``dual=True``) the bases are the dual NBC bases, so ``source`` and
    ``target`` are the models whose duals are meant.
    """

    source: OSAlgebraModel
    target: OSAlgebraModel
    degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    dual: bool = False

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), (len(self.matrix[0]) if self.matrix else self._ncols())

    def _ncols(self) -> int:
        return self.source.dims[self.degree] if self.degree < len(self.source.dims) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedMap) and self.matrix == other.matrix and self.degree == other.degree

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """``self o other``."""
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        rows = len(self.matrix)
        inner = len(other.matrix)
        cols = len(other.matrix[0]) if other.matrix else other._ncols()
        mat = tuple(tuple(sum((self.matrix[r][k] * other.matrix[k][c] for k in range(inner)), Fraction(0))
                          for c in range(cols)) for r in range(rows))
        return GradedMap(other.source, self.target, self.degree, mat, self.dual)

    def apply(self, vec: Sequence) -> list[Fraction]:
        return [sum((Fraction(a) * Fraction(b) for a, b in zip(row, vec)), Fraction(0)) for row in self.matrix]

    def to_json(self) -> str:
        return json.dumps({
            "degree": self.degree,
            "dual": self.dual,
            "rows": [[str(x) if x.denominator != 1 else f"{x.numerator}/1" for x in row] for row in self.matrix],
            "source_basis": [list(s) for s in self.source.nbc[self.degree]],
            "target_basis": [list(s) for s in self.target.nbc[self.degree]],
        })


def _generator_images(phi, source: OSAlgebraModel, target: OSAlgebraModel) -> list[int | None]:
    out: list[int | None] = []
    for h in source.hyperplanes:
        e, f = h.label()
        a, b = phi(e), phi(f)
        out.append(None if a == b else target.hyperplane_index(a, b))
    return out


def restriction_map(phi: BMorphism | ASurjection, degree: int,
                    source: OSAlgebraModel | None = None,
                    target: OSAlgebraModel | None = None) -> GradedMap:
    """Matrix of ``S^degree(A) -> S^degree(A^F) = S^degree(target)`` induced by ``phi``."""
    if isinstance(phi, BMorphism):
        kind, n, d = "B", phi.source_n, phi.target_d
    else:
        kind, n, d = "A", phi.source_n, phi.target_m
    source = source or build_os(n, kind, degree)
    target = target or build_os(d, kind, degree)
    gens = _generator_images(phi, source, target)
    tdim = target.dims[degree] if degree < len(target.dims) else 0
    sbasis = source.nbc[degree] if degree < len(source.nbc) else []
    cols = []
    for s in sbasis:
        col = [Fraction(0)] * tdim
        imgs = [gens[k] for k in s]
        if all(x is not None for x in imgs):
            for key, v in target.reduce(imgs).items():
                col[target.basis_index[degree][key]] += v
        cols.append(col)
    matrix = tuple(tuple(cols[c][r] for c in range(len(cols))) for r in range(tdim))
    return GradedMap(source, target, degree, matrix)


def dual_map(m: GradedMap) -> GradedMap:
    """Transpose in the dual bases; applying it twice gives back ``m``."""
    rows, cols = len(m.matrix), (len(m.matrix[0]) if m.matrix else m._ncols())
    mat = tuple(tuple(m.matrix[r][c] for r in range(rows)) for c in range(cols))
    return GradedMap(m.target, m.source, m.degree, mat, not m.dual)


def dual_vector(model: OSAlgebraModel, pairs: dict[tuple[int, int], Fraction | int]) -> list[Fraction]:
    """Degree-1 dual vector ``sum c v_ef`` from ``{(e, f): c}`` (signed labels)."""
    vec = [Fraction(0)] * model.dims[1]
    for (e, f), c in pairs.items():
        vec[model.basis_index[1][(model.hyperplane_index(e, f),)]] += Fraction(c)
    return vec


def pullback(phi: BMorphism | ASurjection, vec: Sequence, degree: int = 1) -> list[Fraction]:
    """``phi^*(vec)`` for ``vec`` in the dual of the target's degree piece."""
    return dual_map(restriction_map(phi, degree)).apply(vec)


def psi_morphisms(i: int) -> tuple[BMorphism, BMorphism, BMorphism]:
    """Three maps ``[-2i, 2i] -> [1-2i, 2i-1]`` fixing ``[2-2i, 2i-2]``.

    ``psi_1: 2i -> 2i-1, 2i-1 -> 1-2i``; ``psi_2: 2i -> 2i-1, 2i-1 -> 0``;
    ``psi_3: 2i -> 0, 2i-1 -> 2i-1``.
    """
    if i < 1:
        raise ValueError("i must be positive")
    fixed = tuple(range(1, 2 * i - 1))
    a = 2 * i - 1
    return (BMorphism(2 * i, a, fixed + (-a, a)),
            BMorphism(2 * i, a, fixed + (0, a)),
            BMorphism(2 * i, a, fixed + (a, 0)))


def spanning_check(i: int, n: int, max_target: int | None = None) -> bool:
    """Is the dual of ``S^i(B_n)`` spanned by pullbacks from ``[-m, m]``, ``m <= max_target``?

    ``max_target`` defaults to ``2i - 1``.  Pullbacks along one morphism per
    ``W_m``-orbit suffice, since ``W_m`` acts invertibly on the target.
    """
    m_max = 2 * i - 1 if max_target is None else max_target
    source = build_os(n, "B", i)
    dim = source.dims[i]
    space = RowSpace(dim)
    for m in range(0, min(m_max, n) + 1):
        target = build_os(m, "B", i)
        if i >= len(target.dims) or target.dims[i] == 0:
            continue
        for phi in orbit_classes(n, m):
            for row in restriction_map(phi, i, source, target).matrix:
                space.add(row)
                if space.rank == dim:
                    return True
    return space.rank == dim


def os_dims_bound(n: int, i: int) -> int:
    """``binom(n^2, i)``, the bound on ``dim S^i(B_n)`` from degree-1 generation."""
    return comb(n * n, i)


def kunneth_dims(T: ArrIsoType) -> list[int]:
    """Graded dimensions of ``S(T)`` as the convolution of factor dimensions."""
    out = [1]
    for f in T.factors():
        fd = [int(c) for c in os_hilbert(f)]
        conv = [0] * (len(out) + len(fd) - 1)
        for a, x in enumerate(out):
            for b, y in enumerate(fd):
                conv[a + b] += x * y
        out = conv
    return out
