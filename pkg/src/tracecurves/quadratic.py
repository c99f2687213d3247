"""Quadratic forms F_q -> F_2 in characteristic 2.

A form comes either from a linearized polynomial, Q(x) = Tr(x R(x)), or from
pairs, Q(x) = sum Tr(a_i x) Tr(b_i x).  Classification computes the radical
W of the polar form, the subspace W_0 of W where Q vanishes, and for
even-rank forms the Arf invariant on a complement of W.  Zero counts follow
from these without enumeration; :func:`zero_count_exhaustive` is the
enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import ConsistencyError, CostGuardError
from .f2linalg import F2Subspace, rank_of
from .field import GF2m, Scalar, as_bits
from .linearized import LinearizedPoly

HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"
ODD_RANK = "odd-rank"

EXHAUSTIVE_CHECK_MAX_M = 16
ZERO_COUNT_MAX_M = 20


def _parity(v: int) -> int:
    return v.bit_count() & 1


@dataclass(frozen=True)
class FormClassification:
    m: int
    w: int
    w0: int
    rank: int
    kind: str
    zeros: int

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def weight(self) -> int:
        """Weight of the induced codeword on F_q^*."""
        return self.q - self.zeros

    def to_json(self) -> dict:
        return {"w": self.w, "w0": self.w0, "rank": self.rank, "kind": self.kind, "zeros": self.zeros}


def zeros_for(m: int, w: int, kind: str) -> int:
    """Closed-form zero count of a form with radical dimension w and the given kind."""
    q = 1 << m
    if kind == ODD_RANK:
        return q // 2
    if (m - w) % 2:
        raise ValueError(f"m - w = {m - w} must be even for an even-rank form")
    root = 1 << ((m + w) // 2)  # sqrt(q * 2^w)
    return (q + root) // 2 if kind == HYPERBOLIC else (q - root) // 2


class QuadraticForm:
    """An F_2-valued quadratic form on F_q."""

    def __init__(self, field: GF2m, R: LinearizedPoly | None = None,
                 a: Sequence[Scalar] = (), b: Sequence[Scalar] = ()):
        self.field = field
        if R is not None:
            if R.field != field:
                raise ValueError("polynomial lives in a different field")
            self.source = "from_R"
            self.R = R
            self.a = self.b = ()
        else:
            if len(a) != len(b):
                raise ValueError(f"pair lists differ in length: {len(a)} vs {len(b)}")
            self.source = "from_pairs"
            self.R = None
            self.a = tuple(as_bits(field, x) for x in a)
            self.b = tuple(as_bits(field, x) for x in b)

    @classmethod
    def from_R(cls, R: LinearizedPoly) -> "QuadraticForm":
        return cls(R.field, R=R)

    @classmethod
    def from_pairs(cls, field: GF2m, a: Sequence[Scalar], b: Sequence[Scalar]) -> "QuadraticForm":
        return cls(field, a=a, b=b)

    def __repr__(self) -> str:
        if self.R is not None:
            return f"QuadraticForm(Tr(x R(x)), R={self.R!r})"
        return f"QuadraticForm(pairs a={[hex(x) for x in self.a]}, b={[hex(x) for x in self.b]})"

    # ---- evaluation

    def __call__(self, x: Scalar) -> int:
        f = self.field
        x = as_bits(f, x)
        if self.R is not None:
            return f.trace(f.mul(x, self.R(x)))
        out = 0
        for ai, bi in zip(self.a, self.b):
            out ^= f.trace(f.mul(ai, x)) & f.trace(f.mul(bi, x))
        return out

    @cached_property
    def values(self):
        """uint8 array of Q(x) for every x in F_q, indexed by x."""
        f = self.field
        xs = f.all_elements
        if self.R is not None:
            vals = f.vtrace(f.vmul(xs, self.R.eval_all()))
        else:
            vals = np.zeros(f.q, dtype=np.uint8)
            for ai, bi in zip(self.a, self.b):
                vals ^= f.vtrace(f.vmul(xs, ai)) & f.vtrace(f.vmul(xs, bi))
        vals.setflags(write=False)
        return vals

    def __eq__(self, other) -> bool:
        # distinct sources may induce the same function
        return (isinstance(other, QuadraticForm) and other.field == self.field
                and np.array_equal(self.values, other.values))

    __hash__ = None

    def bilinear(self, x: Scalar, y: Scalar) -> int:
        f = self.field
        x, y = as_bits(f, x), as_bits(f, y)
        if self.R is not None:
            return f.trace(f.mul(x, self.R(y)) ^ f.mul(y, self.R(x)))
        out = 0
        for ai, bi in zip(self.a, self.b):
            tx = (f.trace(f.mul(ai, x)), f.trace(f.mul(bi, x)))
            ty = (f.trace(f.mul(ai, y)), f.trace(f.mul(bi, y)))
            out ^= (tx[0] & ty[1]) ^ (ty[0] & tx[1])
        return out

    @cached_property
    def gram(self) -> list[int]:
        """Row i has bit j set iff B(t^i, t^j) = 1."""
        f = self.field
        m = f.m
        if self.R is not None:
            images = [self.R(1 << j) for j in range(m)]
            entry = lambda i, j: f.trace(f.mul(1 << i, images[j]) ^ f.mul(1 << j, images[i]))  # noqa: E731
        else:
            ta = [sum(f.trace(f.mul(x, 1 << i)) << k for k, x in enumerate(self.a)) for i in range(m)]
            tb = [sum(f.trace(f.mul(x, 1 << i)) << k for k, x in enumerate(self.b)) for i in range(m)]
            entry = lambda i, j: _parity(ta[i] & tb[j]) ^ _parity(ta[j] & tb[i])  # noqa: E731
        rows = [0] * m
        for i in range(m):
            for j in range(i + 1, m):
                if entry(i, j):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return rows

    def _pair(self, x: int, y: int) -> int:
        acc = 0
        for i, row in enumerate(self.gram):
            if x >> i & 1:
                acc ^= row
        return _parity(acc & y)

    # ---- structure

    @cached_property
    def radical(self) -> F2Subspace:
        from .f2linalg import F2Matrix

        return F2Matrix(self.gram, self.field.m).kernel()

    @cached_property
    def radical_zero(self) -> F2Subspace:
        W = self.radical
        # Q is additive on W, so W_0 is the kernel of a linear functional there
        on = [v for v in W.basis if self(v)]
        if not on:
            return W
        pivot = on[0]
        return F2Subspace([v for v in W.basis if not self(v)] + [v ^ pivot for v in on[1:]], W.ambient)

    def arf(self) -> int:
        """Arf invariant of Q restricted to a complement of the radical."""
        m = self.field.m
        W = self.radical
        span = W
        comp = []
        for i in range(m):
            e = 1 << i
            if e not in span:
                comp.append(e)
                span = span.join([e])
        arf = 0
        while comp:
            u = comp.pop(0)
            idx = next((k for k, v in enumerate(comp) if self._pair(u, v)), None)
            if idx is None:
                raise ConsistencyError("polar form is degenerate on the radical complement")
            v = comp.pop(idx)
            arf ^= self(u) & self(v)
            comp = [x ^ (u if self._pair(x, v) else 0) ^ (v if self._pair(x, u) else 0) for x in comp]
        return arf

    @cached_property
    def classification(self) -> FormClassification:
        m = self.field.m
        w = self.radical.dim
        w0 = self.radical_zero.dim
        if (m - w) % 2:
            raise ConsistencyError(f"radical dimension {w} has wrong parity for m={m}")
        if w0 == w:
            kind = ELLIPTIC if self.arf() else HYPERBOLIC
            rank = m - w
        else:
            kind = ODD_RANK
            rank = m - w + 1
        return FormClassification(m, w, w0, rank, kind, zeros_for(m, w, kind))

    def to_json(self, classify: bool = True) -> dict:
        out: dict = {"kind": self.source}
        if self.R is not None:
            out["coeffs"] = self.R.to_json()
        else:
            out["a"] = [f"{x:#x}" for x in self.a]
            out["b"] = [f"{x:#x}" for x in self.b]
        if classify:
            out["classification"] = self.classification.to_json()
        return out


def bilinear(Q: QuadraticForm, x: Scalar, y: Scalar) -> int:
    return Q.bilinear(x, y)


def radical(Q: QuadraticForm) -> F2Subspace:
    return Q.radical


def radical_zero(Q: QuadraticForm) -> F2Subspace:
    return Q.radical_zero


def zero_count_exhaustive(Q: QuadraticForm, max_m: int = ZERO_COUNT_MAX_M) -> int:
    """N(Q) by evaluating Q at every element of F_q."""
    if Q.field.m > max_m:
        raise CostGuardError(f"exhaustive zero count refused for m={Q.field.m} > {max_m}")
    return int(Q.field.q - int(Q.values.sum()))


def classify(Q: QuadraticForm, check_max_m: int = EXHAUSTIVE_CHECK_MAX_M) -> FormClassification:
    """Rank, kind and zero count of Q.

    For m <= ``check_max_m`` the structural answer is cross-checked against
    enumeration; a mismatch raises :class:`ConsistencyError`.
    """
    c = Q.classification
    if Q.field.m <= check_max_m:
        n = zero_count_exhaustive(Q)
        if n != c.zeros:
            raise ConsistencyError(f"{Q!r}: structural zero count {c.zeros} != enumerated {n}")
    return c


def pair_form(field: GF2m, a: Sequence[Scalar], b: Sequence[Scalar]) -> QuadraticForm:
    return QuadraticForm.from_pairs(field, a, b)


def pair_rank(field: GF2m, a: Sequence[Scalar], b: Sequence[Scalar]) -> int:
    """F_2-rank of the set {a_1..a_k, b_1..b_k}."""
    return rank_of([as_bits(field, x) for x in list(a) + list(b)])
