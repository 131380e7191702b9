"""Dense matrices over Z_p and Gaussian elimination.

Entries are plain ints. A matrix may have zero rows (the generator of the
zero code) but always records its column count.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ModulusMismatch, ShapeMismatch
from .zp import inv_mod


@dataclass(frozen=True)
class ZpMatrix:
    p: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ncols < 1:
            raise ShapeMismatch("matrix needs at least one column")
        rows = tuple(tuple(int(x) % self.p for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise ShapeMismatch(f"row of length {len(r)} in a matrix with {self.ncols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], ncols: int | None = None) -> ZpMatrix:
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(p, ncols, tuple(rows))

    @classmethod
    def identity(cls, p: int, n: int) -> ZpMatrix:
        return cls(p, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, p: int, k: int, n: int) -> ZpMatrix:
        return cls(p, n, ((0,) * n,) * k)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def transpose(self) -> ZpMatrix:
        if not self.rows:
            raise ShapeMismatch("cannot transpose a matrix without rows")
        return ZpMatrix(self.p, self.nrows, tuple(zip(*self.rows)))

    def __matmul__(self, other: ZpMatrix) -> ZpMatrix:
        if other.p != self.p:
            raise ModulusMismatch(f"mod {self.p} times mod {other.p}")
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return ZpMatrix(
            self.p,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
        )

    def hstack(self, other: ZpMatrix) -> ZpMatrix:
        if other.nrows != self.nrows:
            raise ShapeMismatch("hstack needs equal row counts")
        return ZpMatrix(self.p, self.ncols + other.ncols, tuple(a + b for a, b in zip(self.rows, other.rows)))

    def select_columns(self, columns: Sequence[int]) -> ZpMatrix:
        return ZpMatrix(self.p, len(columns), tuple(tuple(r[c] for c in columns) for r in self.rows))

    def pad_rows(self, k: int) -> ZpMatrix:
        """Append zero rows up to ``k`` rows."""
        return ZpMatrix(self.p, self.ncols, self.rows + ((0,) * self.ncols,) * (k - self.nrows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)


def _rref(M: ZpMatrix) -> tuple[list[list[int]], list[int]]:
    p = M.p
    a = [list(r) for r in M.rows]
    pivots: list[int] = []
    top = 0
    for col in range(M.ncols):
        if top == len(a):
            break
        pr = next((i for i in range(top, len(a)) if a[i][col]), None)
        if pr is None:
            continue
        a[top], a[pr] = a[pr], a[top]
        f = inv_mod(a[top][col], p)
        a[top] = [x * f % p for x in a[top]]
        for i in range(len(a)):
            if i != top and a[i][col]:
                g = a[i][col]
                a[i] = [(x - g * y) % p for x, y in zip(a[i], a[top])]
        pivots.append(col)
        top += 1
    return a, pivots


def row_reduce(M: ZpMatrix) -> ZpMatrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    a, _ = _rref(M)
    return ZpMatrix(M.p, M.ncols, tuple(map(tuple, a)))


def pivot_columns(M: ZpMatrix) -> tuple[int, ...]:
    return tuple(_rref(M)[1])


def component_rank(M: ZpMatrix) -> int:
    return len(_rref(M)[1])


rank = component_rank


def row_space_basis(M: ZpMatrix) -> ZpMatrix:
    """Nonzero rows of the reduced row-echelon form."""
    a, pivots = _rref(M)
    return ZpMatrix(M.p, M.ncols, tuple(tuple(r) for r in a[: len(pivots)]))


def same_row_space(A: ZpMatrix, B: ZpMatrix) -> bool:
    return A.p == B.p and A.ncols == B.ncols and row_space_basis(A) == row_space_basis(B)


def in_row_space(M: ZpMatrix, v: Sequence[int]) -> bool:
    if len(v) != M.ncols:
        raise ShapeMismatch(f"vector of length {len(v)} against {M.ncols} columns")
    extended = ZpMatrix(M.p, M.ncols, M.rows + (tuple(v),))
    return component_rank(extended) == component_rank(M)
