"""The binary trace codes C_h = {(Tr(x R(x)))_{x in F_q^*} : R in R_h}.

Codewords are Python ints of q-1 bits; bit x-1 holds the coordinate at the
field element with bitmask x, so coordinates follow increasing bitmask order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import ConsistencyError, CostGuardError
from .f2linalg import rank_of
from .field import GF2m
from .linearized import LinearizedPoly
from .quadratic import QuadraticForm

MIN_WEIGHT_MAX_OPS = 1 << 28
GHW_MAX_OPS = 1 << 31


def _pack(vals) -> int:
    """uint8 array of Q(x) over all x -> codeword int (coordinate 0 dropped)."""
    return int.from_bytes(np.packbits(vals[1:], bitorder="little").tobytes(), "little")


@dataclass(frozen=True)
class Codeword:
    bits: int
    length: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __add__(self, other: "Codeword") -> "Codeword":
        if other.length != self.length:
            raise ValueError("codewords of different lengths")
        return Codeword(self.bits ^ other.bits, self.length)

    def __getitem__(self, x: int) -> int:
        """Coordinate at the nonzero field element x."""
        if not 1 <= x <= self.length:
            raise IndexError(x)
        return self.bits >> (x - 1) & 1

    def to_hex(self) -> str:
        return self.bits.to_bytes((self.length + 7) // 8, "little").hex()

    @classmethod
    def from_hex(cls, s: str, length: int) -> "Codeword":
        return cls(int.from_bytes(bytes.fromhex(s), "little"), length)


def word_of(R: LinearizedPoly) -> Codeword:
    """c_R, computed by evaluating Tr(x R(x)) at every nonzero x."""
    return Codeword(_pack(QuadraticForm.from_R(R).values), R.field.q - 1)


def min_weight_formula(m: int, h: int) -> int | None:
    """Closed-form d_1(C_h); None outside 1 <= h < m/2."""
    if not 1 <= h or 2 * h >= m:
        return None
    q = 1 << m
    w = 2 * h - 1 if m % 2 else 2 * h
    return (q - (1 << ((m + w) // 2))) // 2


def ghw_from_min_subcode(d1: int, r: int) -> int:
    """d_r = (2^r - 1) d_1 / 2^(r-1), valid when a minimum weight subcode exists."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    num = ((1 << r) - 1) * d1
    if num % (1 << (r - 1)):
        raise ValueError(f"2^{r - 1} does not divide (2^{r}-1)*{d1}")
    return num >> (r - 1)


class TraceCode:
    """C_h over a given field, with its generator words."""

    def __init__(self, field: GF2m, h: int):
        if h < 0 or h > field.m // 2:
            raise ValueError(f"h must satisfy 0 <= h <= m/2, got h={h}, m={field.m}")
        self.field = field
        self.h = h
        self.length = field.q - 1

    def __repr__(self) -> str:
        return f"TraceCode(m={self.field.m}, h={self.h})"

    @cached_property
    def generator(self) -> list[int]:
        """Words of t^k x^(2^i) for i <= h, k < m, ordered by (i, k)."""
        f = self.field
        xs = f.all_elements
        rows = []
        for xp in f.frobenius_table(self.h + 1):
            for k in range(f.m):
                vals = f.vtrace(f.vmul(xs, f.vmul(xp, 1 << k)))
                rows.append(_pack(vals))
        return rows

    @cached_property
    def word_basis(self) -> list[int]:
        """An independent subset of the generator spanning the code."""
        basis, kept = [], []
        for row in self.generator:
            if rank_of(kept + [row]) > len(kept):
                kept.append(row)
                basis.append(row)
        return basis

    @property
    def dimension(self) -> int:
        return len(self.word_basis)

    def word_linear(self, R: LinearizedPoly) -> Codeword:
        """c_R as an XOR of generator rows (uses linearity of R -> c_R)."""
        if R.top_index is not None and R.top_index > self.h:
            raise ValueError(f"{R!r} is not in R_{self.h}")
        m = self.field.m
        bits = 0
        for i, c in enumerate(R.coeffs):
            for k in range(m):
                if c >> k & 1:
                    bits ^= self.generator[i * m + k]
        return Codeword(bits, self.length)

    def word(self, R: LinearizedPoly) -> Codeword:
        if R.top_index is not None and R.top_index > self.h:
            raise ValueError(f"{R!r} is not in R_{self.h}")
        return word_of(R)

    def packed_basis(self):
        """word_basis as a (k, L) uint64 array."""
        n = (self.length + 63) // 64
        out = np.zeros((self.dimension, n), dtype=np.uint64)
        for i, w in enumerate(self.word_basis):
            out[i] = np.frombuffer(w.to_bytes(8 * n, "little"), dtype="<u8")
        return out

    def all_words_packed(self):
        """Every codeword as rows of a (2^k, L) uint64 array; row index = basis coefficients."""
        return _span_table(self.packed_basis())


def _span_table(rows):
    table = np.zeros((1 << len(rows), rows.shape[1]), dtype=np.uint64)
    for i, row in enumerate(rows):
        table[1 << i: 2 << i] = table[: 1 << i] ^ row
    return table


def min_weight_exhaustive(code: TraceCode, max_ops: int = MIN_WEIGHT_MAX_OPS, jobs: int = 1) -> int:
    """d_1 by sweeping every nonzero codeword."""
    m, h = code.field.m, code.h
    cost = code.field.q ** (h + 1)
    if cost > max_ops:
        raise CostGuardError(f"exhaustive d_1 sweep over q^(h+1) = 2^{m * (h + 1)} polynomials exceeds budget {max_ops}")
    basis = code.packed_basis()
    k = len(basis)
    if k == 0:
        raise ValueError("code is zero")
    lo = min(k, 16)
    table = _span_table(basis[:lo])
    high = _span_table(basis[lo:]) if k > lo else np.zeros((1, basis.shape[1]), dtype=np.uint64)

    def sweep(idx: range) -> int:
        best = code.length + 1
        for j in idx:
            weights = np.bitwise_count(table ^ high[j]).sum(axis=1)
            if j == 0:
                weights = weights[1:]
            best = min(best, int(weights.min()))
        return best

    n = len(high)
    if jobs > 1 and n > 1:
        chunks = [range(s, n, jobs) for s in range(jobs)]
        with ThreadPoolExecutor(jobs) as pool:
            d1 = min(pool.map(sweep, chunks))
    else:
        d1 = sweep(range(n))
    expected = min_weight_formula(m, h)
    if expected is not None and d1 != expected:
        raise ConsistencyError(f"exhaustive d_1 = {d1} but closed form gives {expected} (m={m}, h={h})")
    return d1


def ghw_exhaustive(code: TraceCode, r: int, max_ops: int = GHW_MAX_OPS) -> int:
    """d_r by searching r-dimensional subcodes, with exact branch-and-bound pruning.

    Each subcode is reached through a basis whose first vector is one of its
    minimum weight words; partial supports only grow, so any branch whose
    support already reaches the incumbent is cut.
    """
    k = code.dimension
    if not 1 <= r <= k:
        raise ValueError(f"r must satisfy 1 <= r <= dim = {k}")
    if (1 << k) ** r > max_ops:
        raise CostGuardError(f"subcode search over (2^{k})^{r} bases exceeds budget {max_ops}")
    words = code.all_words_packed()
    weights = np.bitwise_count(words).sum(axis=1)
    order = np.argsort(weights[1:], kind="stable") + 1
    best = [code.length + 1]

    def extend(depth: int, support, span: np.ndarray, floor: int) -> None:
        union = np.bitwise_count(words | support).sum(axis=1)
        ok = (union < best[0]) & (weights >= floor)
        ok[span] = False
        if depth == r - 1:
            if ok.any():
                best[0] = int(union[ok].min())
            return
        for idx in np.flatnonzero(ok):
            if union[idx] >= best[0]:
                continue
            extend(depth + 1, support | words[idx], np.concatenate([span, span ^ idx]), floor)

    for c1 in order:
        w1 = int(weights[c1])
        if w1 >= best[0]:
            break
        if r == 1:
            best[0] = w1
            break
        extend(1, words[c1], np.array([0, c1]), w1)
    return best[0]


class PolySubcode:
    """An F_2-span of linearized polynomials and the words they induce."""

    def __init__(self, r_basis: Sequence[LinearizedPoly], h: int | None = None):
        if not r_basis:
            self.r_basis: list[LinearizedPoly] = []
            self.field = None
            self.h = h or 0
            return
        self.field = r_basis[0].field
        self.h = max(p.h for p in r_basis) if h is None else h
        self.r_basis = [p.padded(self.h) for p in r_basis]
        flat = [_poly_bits(p) for p in self.r_basis]
        if rank_of(flat) != len(flat):
            raise ValueError("basis polynomials are F_2-dependent")

    @property
    def r(self) -> int:
        return len(self.r_basis)

    def __repr__(self) -> str:
        return f"PolySubcode(r={self.r}, h={self.h})"

    @cached_property
    def basis_words(self) -> list[Codeword]:
        return [word_of(p) for p in self.r_basis]

    @property
    def word_dimension(self) -> int:
        return rank_of(w.bits for w in self.basis_words)

    def span(self) -> Iterator[tuple[LinearizedPoly, Codeword]]:
        """All 2^r - 1 nonzero polynomials of the span with their words."""
        for mask in range(1, 1 << self.r):
            R = None
            bits = 0
            for i in range(self.r):
                if mask >> i & 1:
                    R = self.r_basis[i] if R is None else R + self.r_basis[i]
                    bits ^= self.basis_words[i].bits
            yield R, Codeword(bits, self.field.q - 1)

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "r_basis": [p.to_json() for p in self.r_basis],
            "words": [w.to_hex() for w in self.basis_words],
        }


def _poly_bits(p: LinearizedPoly) -> int:
    m = p.field.m
    return sum(c << (i * m) for i, c in enumerate(p.coeffs))


def subcode_weight(D: PolySubcode) -> int:
    """Support size of the word set of D, cross-checked by the averaging identity."""
    if D.r == 0:
        return 0
    support = 0
    for w in D.basis_words:
        support |= w.bits
    support = support.bit_count()
    total = sum(word.weight for _, word in D.span())
    averaged, rem = divmod(total, 1 << (D.r - 1))
    if rem or averaged != support:
        raise ConsistencyError(f"support {support} != averaged weight {total}/2^{D.r - 1}")
    return support


def is_min_weight_subcode(D: PolySubcode, d1: int) -> bool:
    """True iff every nonzero word in the span of D has weight d1."""
    if D.word_dimension != D.r:
        raise ValueError(f"word image has dimension {D.word_dimension} < r = {D.r}")
    return all(word.weight == d1 for _, word in D.span())
