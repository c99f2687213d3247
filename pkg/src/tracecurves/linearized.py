"""2-linearized polynomials and F_2-matrices of additive maps on F_q^k.

A tuple (x_0, ..., x_{k-1}) in F_q^k is flattened into a k*m bit vector with
bit i of component j at position j*m + i.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence

import numpy as np

from .f2linalg import F2Matrix, F2Subspace
from .field import FieldError, GF2m, Scalar, as_bits

AdditiveMap = Callable[[Sequence[int]], Sequence[int]]


def flatten(field: GF2m, xs: Sequence[int]) -> int:
    v = 0
    for j, x in enumerate(xs):
        v |= int(x) << (j * field.m)
    return v


def unflatten(field: GF2m, v: int, k: int) -> list[int]:
    return [(v >> (j * field.m)) & field.mask for j in range(k)]


class LinearizedPoly:
    """R(x) = sum a_i x^(2^i) with coefficients in F_q.

    ``coeffs[i]`` is a_i as an integer.  Trailing zeros are kept so that the
    declared bound h = len(coeffs) - 1 survives round trips.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF2m, coeffs: Sequence[Scalar]):
        self.field = field
        self.coeffs = tuple(as_bits(field, c) for c in coeffs)

    @classmethod
    def monomial(cls, field: GF2m, coeff: Scalar, i: int, h: int | None = None) -> "LinearizedPoly":
        h = i if h is None else h
        coeffs = [0] * (h + 1)
        coeffs[i] = as_bits(field, coeff)
        return cls(field, coeffs)

    @property
    def h(self) -> int:
        return len(self.coeffs) - 1

    @property
    def top_index(self) -> int | None:
        """h' with effective degree 2^h'; None for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    @property
    def degree(self) -> int | None:
        top = self.top_index
        return None if top is None else 1 << top

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def padded(self, h: int) -> "LinearizedPoly":
        if h < (self.top_index or 0):
            raise ValueError(f"cannot fit degree 2^{self.top_index} into bound h={h}")
        return LinearizedPoly(self.field, (self.coeffs + (0,) * (h + 1))[: h + 1])

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        if other.field != self.field:
            raise FieldError("polynomials over different fields")
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return LinearizedPoly(self.field, [x ^ y for x, y in zip(a, b)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearizedPoly) or other.field != self.field:
            return False
        n = max(len(self.coeffs), len(other.coeffs))
        return self.coeffs + (0,) * (n - len(self.coeffs)) == other.coeffs + (0,) * (n - len(other.coeffs))

    def __hash__(self) -> int:
        top = self.top_index
        return hash(self.coeffs[: (top + 1) if top is not None else 0])

    def __repr__(self) -> str:
        terms = [f"{c:#x}*x^{1 << i}" for i, c in enumerate(self.coeffs) if c]
        return "LinearizedPoly(" + (" + ".join(terms) or "0") + ")"

    def __call__(self, x: Scalar) -> int:
        return eval_poly(self, x)

    def eval_all(self):
        """numpy array of R(x) for every x in F_q (indexed by x)."""
        f = self.field
        pows = f.frobenius_table(len(self.coeffs))
        out = np.zeros(f.q, dtype=np.uint64)
        for c, xp in zip(self.coeffs, pows):
            if c:
                out ^= f.vmul(xp, c)
        return out

    def to_json(self) -> list[str]:
        return [f"{c:#x}" for c in self.coeffs]

    @classmethod
    def from_json(cls, field: GF2m, data: Sequence[str]) -> "LinearizedPoly":
        return cls(field, [int(c, 16) for c in data])


def eval_poly(R: LinearizedPoly, x: Scalar) -> int:
    f = R.field
    x = as_bits(f, x)
    out = 0
    for c in R.coeffs:
        if c:
            out ^= f.mul(c, x)
        x = f.square(x)
    return out


def map_matrix(fn: AdditiveMap, field: GF2m, k: int, l: int, self_check: int = 0, seed: int = 0) -> F2Matrix:
    """F_2-matrix (l*m rows, k*m columns) of an additive map F_q^k -> F_q^l.

    ``self_check`` > 0 compares the matrix action with ``fn`` on that many
    random inputs and raises if they disagree (i.e. fn was not additive).
    """
    m = field.m
    cols = []
    for j in range(k):
        for i in range(m):
            e = [0] * k
            e[j] = 1 << i
            out = fn(e)
            if len(out) != l:
                raise ValueError(f"map returned {len(out)} components, expected {l}")
            cols.append(flatten(field, out))
    M = F2Matrix.from_columns(cols, l * m)
    if self_check:
        rng = random.Random(seed)
        for _ in range(self_check):
            xs = [rng.randrange(field.q) for _ in range(k)]
            if M.apply(flatten(field, xs)) != flatten(field, fn(xs)):
                raise ValueError("map is not F_2-additive")
    return M


def solve_linearized_system(fn: AdditiveMap, field: GF2m, k: int, l: int) -> F2Subspace:
    """Zero set of an additive map F_q^k -> F_q^l as an F_2-subspace of F_q^k."""
    if l == 0:
        return F2Subspace.full(k * field.m)
    return map_matrix(fn, field, k, l).kernel()
