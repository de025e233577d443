"""Small exact linear algebra over Q (row echelon form, rank, span tests)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RowSpace:
    """Incrementally maintained echelon basis of a subspace of Q^dim."""

    def __init__(self, dim: int, rows: Iterable[Sequence] = ()):
        self.dim = dim
        self.pivots: list[int] = []
        self.rows: list[list[Fraction]] = []
        for r in rows:
            self.add(r)

    def copy(self) -> "RowSpace":
        out = RowSpace(self.dim)
        out.pivots = list(self.pivots)
        out.rows = [list(r) for r in self.rows]
        return out

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                for k in range(p, self.dim):
                    if row[k]:
                        v[k] -= c * row[k]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Add a vector; returns True if the rank went up."""
        v = self.reduce(vec)
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for row in self.rows:
            c = row[piv]
            if c:
                for k in range(piv, self.dim):
                    if v[k]:
                        row[k] -= c * v[k]
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < piv:
            pos += 1
        self.pivots.insert(pos, piv)
        self.rows.insert(pos, v)
        return True


def rank(rows: Iterable[Sequence], dim: int) -> int:
    return RowSpace(dim, rows).rank


def solve_in_basis(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i basis_i = target`` for independent ``basis``."""
    dim = len(target)
    k = len(basis)
    # augmented columns: solve B^T c = target by elimination on rows of B^T
    mat = [[Fraction(basis[i][r]) for i in range(k)] + [Fraction(target[r])] for r in range(dim)]
    piv_cols = []
    row = 0
    for col in range(k):
        sel = next((r for r in range(row, dim) if mat[r][col]), None)
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(dim):
            if r != row and mat[r][col]:
                c = mat[r][col]
                mat[r] = [a - c * b for a, b in zip(mat[r], mat[row])]
        piv_cols.append(col)
        row += 1
    if any(mat[r][k] for r in range(row, dim)):
        return None
    out = [Fraction(0)] * k
    for r, col in enumerate(piv_cols):
        out[col] = mat[r][k]
    return out
