"""Arithmetic in GF(2^m) with elements stored as m-bit integers.

Elements are coordinate vectors over the polynomial basis 1, t, ..., t^(m-1):
bit i of the integer is the coefficient of t^i.  Addition is XOR and
multiplication is a carry-less product reduced by the field modulus.

Most of the package works directly on the integer representation for speed;
:class:`FieldElement` is a thin value wrapper for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

import numpy as np

MAX_DEGREE = 24

# Lexicographically smallest irreducible polynomial of each degree.
DEFAULT_MODULI = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021,
    15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
}


class FieldError(ValueError):
    """Invalid field construction or mixed-field arithmetic."""


def poly_mod(a: int, b: int) -> int:
    """Remainder of a(t) divided by b(t) over F_2."""
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


@lru_cache(maxsize=None)
def find_factor(f: int) -> int | None:
    """Return a nontrivial factor of f by trial division, or None."""
    m = f.bit_length() - 1
    for d in range(1, m // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if poly_mod(f, g) == 0:
                return g
    return None


def is_irreducible(f: int) -> bool:
    return f.bit_length() > 2 and find_factor(f) is None


def irreducible_polys(m: int) -> Iterator[int]:
    """Yield the irreducible polynomials of degree m in increasing order."""
    for f in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(f):
            yield f


def _poly_str(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if f >> i & 1:
            terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
    return "+".join(terms) or "0"


class GF2m:
    """The field F_{2^m} for a fixed irreducible modulus.

    Instances are immutable and compare equal when m and the modulus agree.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not isinstance(m, int) or not 2 <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree must satisfy 2 <= m <= {MAX_DEGREE}, got {m!r}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if modulus.bit_length() - 1 != m:
            raise FieldError(f"modulus {_poly_str(modulus)} does not have degree {m}")
        factor = find_factor(modulus)
        if factor is not None:
            raise FieldError(
                f"modulus {_poly_str(modulus)} is reducible: divisible by {_poly_str(factor)}"
            )
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.mask = self.q - 1
        # bit i of trace_mask is Tr(t^i); trace is then a parity of x & trace_mask
        self.trace_mask = 0
        for i in range(m):
            if self._trace_slow(1 << i):
                self.trace_mask |= 1 << i

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def to_json(self) -> dict:
        return {"m": self.m, "modulus": f"{self.modulus:#x}"}

    @classmethod
    def from_json(cls, data: dict) -> "GF2m":
        return cls(int(data["m"]), int(data["modulus"], 16))

    # ---- scalar arithmetic on integer representations

    def reduce(self, a: int) -> int:
        m, f = self.m, self.modulus
        while a >> m:
            a ^= f << (a.bit_length() - 1 - m)
        return a

    def mul(self, a: int, b: int) -> int:
        return self.reduce(clmul(a, b))

    def square(self, a: int) -> int:
        return self.reduce(clmul(a, a))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int, j: int = 1) -> int:
        """a^(2^j); the exponent is taken mod m."""
        for _ in range(j % self.m):
            a = self.square(a)
        return a

    def inv_frobenius(self, a: int, j: int = 1) -> int:
        """The unique y with y^(2^j) = a."""
        return self.frobenius(a, self.m - j % self.m)

    def _trace_slow(self, a: int) -> int:
        s, y = 0, a
        for _ in range(self.m):
            s ^= y
            y = self.square(y)
        return s

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    def elements(self) -> range:
        return range(self.q)

    def subfield(self, k: int) -> list[int]:
        """Elements of the subfield F_{2^k} (fixed points of x -> x^(2^k))."""
        if self.m % k:
            raise FieldError(f"F_2^{k} is not a subfield of F_2^{self.m}")
        return _subfield_by_kernel(self, k)

    # ---- vectorized arithmetic over numpy uint64 arrays

    def vmul(self, a, b):
        """Elementwise product; either operand may be a Python int."""
        a = np.asarray(a, dtype=np.uint64)
        acc = np.zeros(np.broadcast(a, np.asarray(b)).shape, dtype=np.uint64)
        if isinstance(b, (int, np.integer)):
            b = int(b)
            for i in range(self.m):
                if b >> i & 1:
                    acc ^= a << np.uint64(i)
        else:
            b = np.asarray(b, dtype=np.uint64)
            one = np.uint64(1)
            for i in range(self.m):
                bit = (b >> np.uint64(i)) & one
                acc ^= (a << np.uint64(i)) * bit
        return self._vreduce(acc)

    def _vreduce(self, acc):
        one = np.uint64(1)
        f = np.uint64(self.modulus)
        for d in range(2 * self.m - 2, self.m - 1, -1):
            acc ^= ((acc >> np.uint64(d)) & one) * (f << np.uint64(d - self.m))
        return acc

    def vtrace(self, a):
        a = np.asarray(a, dtype=np.uint64)
        return (np.bitwise_count(a & np.uint64(self.trace_mask)) & 1).astype(np.uint8)

    def vfrobenius(self, a, j: int = 1):
        a = np.asarray(a, dtype=np.uint64)
        for _ in range(j % self.m):
            a = self.vmul(a, a)
        return a

    @property
    def all_elements(self):
        """numpy array 0..q-1, cached."""
        arr = getattr(self, "_all", None)
        if arr is None:
            arr = np.arange(self.q, dtype=np.uint64)
            self._all = arr
        return arr

    def frobenius_table(self, count: int) -> list:
        """[x^(2^i) for all x] for i < count, cached as numpy arrays."""
        cache = self.__dict__.setdefault("_frob_tables", [self.all_elements])
        while len(cache) < count:
            cache.append(self.vmul(cache[-1], cache[-1]))
        return cache[:count]


def _subfield_by_kernel(field: GF2m, k: int) -> list[int]:
    from .f2linalg import F2Matrix

    cols = [field.frobenius(1 << i, k) ^ (1 << i) for i in range(field.m)]
    ker = F2Matrix.from_columns(cols, field.m).kernel()
    return sorted(ker.elements())


Scalar = Union[int, "FieldElement"]


def as_bits(field: GF2m, x: Scalar) -> int:
    """Integer representation of x, checking field membership."""
    if isinstance(x, FieldElement):
        if x.field != field:
            raise FieldError(f"element of {x.field!r} used in {field!r}")
        return x.bits
    x = int(x)
    if not 0 <= x < field.q:
        raise FieldError(f"{x:#x} is not an element of {field!r}")
    return x


@dataclass(frozen=True)
class FieldElement:
    field: GF2m
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.field.q:
            raise FieldError(f"{self.bits:#x} does not fit in {self.field.m} bits")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.bits ^ o)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.bits, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.bits, self.field.inv(o)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.bits, e))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def frobenius(self, j: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.bits, j))

    def inv_frobenius(self, j: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_frobenius(self.bits, j))

    def trace(self) -> int:
        return self.field.trace(self.bits)

    def hex(self) -> str:
        return f"{self.bits:#x}"

    def __repr__(self) -> str:
        return f"FieldElement({self.bits:#x})"


def field_new(m: int, modulus: int | None = None) -> GF2m:
    return GF2m(m, modulus)
