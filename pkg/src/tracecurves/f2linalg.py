"""Linear algebra over F_2 with vectors packed into Python ints.

Bit j of a row is the entry in column j.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence


def rank_of(vectors: Iterable[int]) -> int:
    """F_2-rank of a collection of bit vectors."""
    return len(_echelon(list(vectors)))


def _echelon(vectors: list[int]) -> list[int]:
    """Reduced echelon basis, pivots at the highest set bit, sorted by pivot descending."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            # clear the new pivot from existing rows to keep the basis fully reduced
            top = 1 << (v.bit_length() - 1)
            basis = [b ^ v if b & top else b for b in basis]
            basis.append(v)
            basis.sort(reverse=True)
    return basis


class F2Matrix:
    """Matrix over F_2 stored as a list of row bitmasks."""

    def __init__(self, rows: Sequence[int], ncols: int):
        self.rows = [int(r) for r in rows]
        self.ncols = ncols
        limit = 1 << ncols
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError(f"row {r:#x} has more than {ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "F2Matrix":
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in range(nrows):
                if col >> i & 1:
                    rows[i] |= 1 << j
        return cls(rows, len(columns))

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, row in enumerate(self.rows):
            for j in range(self.ncols):
                if row >> j & 1:
                    cols[j] |= 1 << i
        return cols

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Matrix) and (self.rows, self.ncols) == (other.rows, other.ncols)

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"

    def apply(self, v: int) -> int:
        """Matrix-vector product; the result packs row i into bit i."""
        out = 0
        for i, row in enumerate(self.rows):
            if (row & v).bit_count() & 1:
                out |= 1 << i
        return out

    def rref(self) -> tuple["F2Matrix", list[int]]:
        """Row-reduced echelon form (pivot scan from column 0) and pivot columns."""
        rows = [r for r in self.rows]
        pivots: list[int] = []
        top = 0
        for col in range(self.ncols):
            bit = 1 << col
            pivot = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
            if pivot is None:
                continue
            rows[top], rows[pivot] = rows[pivot], rows[top]
            for i in range(len(rows)):
                if i != top and rows[i] & bit:
                    rows[i] ^= rows[top]
            pivots.append(col)
            top += 1
            if top == len(rows):
                break
        return F2Matrix(rows, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "F2Subspace":
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = 1 << free
            for row, col in zip(reduced.rows, pivots):
                if row >> free & 1:
                    v |= 1 << col
            basis.append(v)
        return F2Subspace(basis, self.ncols)

    def solve_affine(self, rhs: int) -> tuple[int, "F2Subspace"] | None:
        """Solve M v = rhs.  Returns (particular solution, kernel) or None if inconsistent."""
        aug = F2Matrix(
            [row | ((rhs >> i & 1) << self.ncols) for i, row in enumerate(self.rows)],
            self.ncols + 1,
        )
        reduced, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        v = 0
        for row, col in zip(reduced.rows, pivots):
            if row >> self.ncols & 1:
                v |= 1 << col
        return v, self.kernel()


class F2Subspace:
    """Subspace of F_2^n given by a reduced echelon basis."""

    def __init__(self, vectors: Iterable[int], dim_ambient: int):
        self.ambient = dim_ambient
        self.basis = _echelon(list(vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def __repr__(self) -> str:
        return f"F2Subspace(dim={self.dim}, ambient={self.ambient})"

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Subspace) and self.basis == other.basis and self.ambient == other.ambient

    @classmethod
    def full(cls, n: int) -> "F2Subspace":
        return cls([1 << i for i in range(n)], n)

    def reduce(self, v: int) -> int:
        for b in self.basis:
            if v ^ b < v:
                v ^= b
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def elements(self) -> Iterator[int]:
        for coeffs in product((0, 1), repeat=self.dim):
            v = 0
            for c, b in zip(coeffs, self.basis):
                if c:
                    v ^= b
            yield v

    def join(self, other: "F2Subspace | Iterable[int]") -> "F2Subspace":
        extra = other.basis if isinstance(other, F2Subspace) else list(other)
        return F2Subspace(self.basis + extra, self.ambient)

    def image(self, fn, dim_target: int) -> "F2Subspace":
        """Image under an F_2-linear map given as a function on bit vectors."""
        return F2Subspace((fn(b) for b in self.basis), dim_target)

    def issubspace(self, other: "F2Subspace") -> bool:
        return all(b in other for b in self.basis)
