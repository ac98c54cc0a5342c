"""Exact rational matrices and subspace arithmetic.

Ranks go through the integer kernels after clearing denominators row by
row; bases of kernels and images come from reduced row echelon form over
``Fraction``.  Subspaces are carried as lists of column vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import kernels

Vec = tuple[Fraction, ...]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        d = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * d) for x in r])
    return out


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[Vec, ...]
    ncols: int

    @classmethod
    def of(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RationalMatrix":
        rr = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rr[0]) if rr else 0
        if any(len(r) != ncols for r in rr):
            raise ValueError("ragged matrix")
        return cls(rr, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RationalMatrix":
        return cls.of([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vec]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.of(self.columns(), self.nrows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return RationalMatrix.of(
            [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols]
             for r in self.rows], other.ncols)

    def apply(self, v: Sequence) -> Vec:
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0))
                     for r in self.rows)

    def __mul__(self, s) -> "RationalMatrix":
        s = Fraction(s)
        return RationalMatrix(tuple(tuple(x * s for x in r) for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                    for r, s in zip(self.rows, other.rows)), self.ncols)

    def __pow__(self, k: int) -> "RationalMatrix":
        out = RationalMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def rank(self) -> int:
        return kernels.rank_int(_integer_rows(self.rows))

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        m = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, len(m)) if m[i][col]), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            p = m[row][col]
            m[row] = [x / p for x in m[row]]
            for i in range(len(m)):
                if i != row and m[i][col]:
                    f = m[i][col]
                    m[i] = [x - f * y for x, y in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == len(m):
                break
        return m[:row], pivots

    def nullspace(self) -> list[Vec]:
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, pc in zip(red, pivots):
                v[pc] = -r[f]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> list[Vec]:
        _, pivots = self.rref()
        return [self.column(j) for j in pivots]


def block_diag(*blocks: RationalMatrix) -> RationalMatrix:
    n = sum(b.ncols for b in blocks)
    rows, off = [], 0
    for b in blocks:
        for r in b.rows:
            rows.append((Fraction(0),) * off + r + (Fraction(0),) * (n - off - b.ncols))
        off += b.ncols
    return RationalMatrix(tuple(rows), n)


def span_rank(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return RationalMatrix.of(vectors, dim).rank()


def span_basis(vectors: Sequence[Sequence], dim: int) -> list[Vec]:
    if not vectors:
        return []
    red, _ = RationalMatrix.of(vectors, dim).rref()
    return [tuple(r) for r in red]


def sum_dim(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> int:
    return span_rank(list(a) + list(b), dim)


def intersection_dim(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> int:
    """``dim(A ∩ B) = dim A + dim B - dim(A + B)``."""
    return span_rank(a, dim) + span_rank(b, dim) - sum_dim(a, b, dim)


def intersection_basis(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> list[Vec]:
    a, b = span_basis(a, dim), span_basis(b, dim)
    if not a or not b:
        return []
    # solve sum x_i a_i - sum y_j b_j = 0
    cols = list(a) + [tuple(-x for x in v) for v in b]
    null = RationalMatrix.from_columns(cols, dim).nullspace()
    vecs = [tuple(sum((c * v[k] for c, v in zip(n[: len(a)], a)), Fraction(0))
                  for k in range(dim)) for n in null]
    return span_basis(vecs, dim)
