"""Minimum weight subcodes of C_h from sums of products of traces.

For a fixed F_2-independent tuple a = (1, a_2, ..., a_M) the words
sum_i Tr(a_i x) Tr(b_i x) lie in C_h exactly when b solves the linearized
system

    sum_i a_i^(2^j) b_i + a_i b_i^(2^j) = 0,    j in j_range,

with j_range = h+1..(m-1)/2 for odd m and h+1..m/2 for even m.  The system
is solved as an F_2 kernel.  Its solution space S projects onto V (the
first coordinates b_1); every b_1 in V outside span(a) gives a word of
minimum weight, and dim V - M independent choices give a minimum weight
subcode of that dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .codes import PolySubcode, min_weight_formula, word_of
from .errors import ConsistencyError, CostGuardError
from .f2linalg import F2Matrix, F2Subspace, rank_of
from .field import GF2m, Scalar, as_bits
from .linearized import LinearizedPoly, flatten, solve_linearized_system, unflatten
from .quadratic import pair_form, pair_rank

PRESETS = ("powers", "subfield-F8", "f4-element")


class NoSubcodeError(ValueError):
    """Requested subcode dimension exceeds dim V - M."""


def system_shape(m: int, h: int) -> tuple[int, int, range]:
    """(w, M, j_range) for the minimum weight system of C_h over F_{2^m}."""
    if m % 2:
        if not 1 <= h <= (m - 1) // 2:
            raise ValueError(f"odd m={m} needs 1 <= h <= {(m - 1) // 2}, got h={h}")
        w = 2 * h - 1
        return w, (m - w) // 2, range(h + 1, (m - 1) // 2 + 1)
    if not 1 <= h < m // 2:
        raise ValueError(f"even m={m} needs 1 <= h < {m // 2}, got h={h}")
    w = 2 * h
    return w, (m - w) // 2, range(h + 1, m // 2 + 1)


def _smallest_outside_f2(elements: list[int]) -> int:
    return min(x for x in elements if x > 1)


def preset_tuple(name: str, field: GF2m, M: int) -> list[int]:
    """Named a-tuples.

    ``powers``: (1, t, ..., t^(M-1)).
    ``subfield-F8``: (1, g, g^2) with g the smallest element of F_8 - F_2.
    ``f4-element``: (1, r) with r the smallest element of F_4 - F_2.
    """
    if name == "powers":
        return [1 << i for i in range(M)]
    if name == "subfield-F8":
        if field.m % 3 or M != 3:
            raise ValueError("subfield-F8 needs 3 | m and M = 3")
        g = _smallest_outside_f2(field.subfield(3))
        return [1, g, field.square(g)]
    if name == "f4-element":
        if field.m % 2 or M != 2:
            raise ValueError("f4-element needs m even and M = 2")
        return [1, _smallest_outside_f2(field.subfield(2))]
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


def default_preset(m: int, M: int) -> str:
    return "f4-element" if m % 2 == 0 and M == 2 else "powers"


def pair_equations(field: GF2m, a: Sequence[int], js: Sequence[int]):
    """The additive map b -> (sum_i a_i^(2^j) b_i + a_i b_i^(2^j))_j."""
    a_frob = {j: [field.frobenius(x, j) for x in a] for j in js}

    def fn(b: Sequence[int]) -> list[int]:
        out = []
        for j in js:
            s = 0
            for ai, aij, bi in zip(a, a_frob[j], b):
                s ^= field.mul(aij, bi) ^ field.mul(ai, field.frobenius(bi, j))
            out.append(s)
        return out

    return fn


@dataclass
class PairSystem:
    field: GF2m
    a: tuple[int, ...]
    h: int
    w: int
    M: int
    j_range: range
    S: F2Subspace
    V: F2Subspace
    preset: str | None = None
    _reps: list = dc_field(default_factory=list, repr=False)

    @property
    def max_r(self) -> int:
        return self.V.dim - self.M

    def solution(self, v: int) -> list[int]:
        return unflatten(self.field, v, self.M)

    def equations(self):
        return pair_equations(self.field, self.a, list(self.j_range))

    def to_json(self) -> dict:
        return {
            "a": [f"{x:#x}" for x in self.a],
            "preset": self.preset,
            "h": self.h,
            "w": self.w,
            "M": self.M,
            "j_range": list(self.j_range),
            "dim_S": self.S.dim,
            "dim_V": self.V.dim,
            "max_r": self.max_r,
        }


def build_system(a: Sequence[Scalar], h: int, field: GF2m, preset: str | None = None) -> PairSystem:
    m = field.m
    w, M, js = system_shape(m, h)
    a = [as_bits(field, x) for x in a]
    if len(a) != M:
        raise ValueError(f"m={m}, h={h} needs M = {M} elements in a, got {len(a)}")
    if a[0] != 1:
        raise ValueError("a_1 must be 1")
    if rank_of(a) != M:
        raise ValueError("a-tuple is F_2-dependent")
    S = solve_linearized_system(pair_equations(field, a, list(js)), field, M, len(js))
    V = S.image(lambda v: v & field.mask, m)
    return PairSystem(field, tuple(a), h, w, M, js, S, V, preset)


def build_preset_system(field: GF2m, h: int, preset: str | None = None) -> PairSystem:
    _, M, _ = system_shape(field.m, h)
    preset = preset or default_preset(field.m, M)
    return build_system(preset_tuple(preset, field, M), h, field, preset)


def _raw_r(field: GF2m, a: Sequence[int], b: Sequence[int], h: int) -> LinearizedPoly:
    coeffs = [0] * (h + 1)
    for ai, bi in zip(a, b):
        coeffs[0] ^= field.mul(ai, bi)
        for j in range(1, h + 1):
            coeffs[j] ^= field.mul(field.frobenius(ai, j), bi) ^ field.mul(ai, field.frobenius(bi, j))
    return LinearizedPoly(field, coeffs)


def _pair_word(field: GF2m, a, b):
    return word_of_form(pair_form(field, a, b))


def word_of_form(Q):
    from .codes import Codeword, _pack

    return Codeword(_pack(Q.values), Q.field.q - 1)


def r_from_pairs(field: GF2m, a: Sequence[Scalar], b: Sequence[Scalar], h: int) -> LinearizedPoly:
    """R in R_h whose word equals sum Tr(a_i x) Tr(b_i x); raises if none is produced."""
    a = [as_bits(field, x) for x in a]
    b = [as_bits(field, x) for x in b]
    R = _raw_r(field, a, b, h)
    if word_of(R) != _pair_word(field, a, b):
        raise ConsistencyError(f"pairs a={a}, b={b} do not give a word of C_{h}")
    return R


def membership_check(field: GF2m, a: Sequence[Scalar], b: Sequence[Scalar], h: int) -> bool:
    """Is the pair-form word a codeword of C_h?"""
    a = [as_bits(field, x) for x in a]
    b = [as_bits(field, x) for x in b]
    return word_of(_raw_r(field, a, b, h)) == _pair_word(field, a, b)


def _lift(sys: PairSystem, b1: int) -> list[int]:
    """A solution tuple in S with first coordinate b1."""
    proj = F2Matrix.from_columns([v & sys.field.mask for v in sys.S.basis], sys.field.m)
    sol = proj.solve_affine(b1)
    if sol is None:
        raise ValueError(f"{b1:#x} is not in V")
    coeffs, _ = sol
    v = 0
    for i, s in enumerate(sys.S.basis):
        if coeffs >> i & 1:
            v ^= s
    return sys.solution(v)


def select_representatives(sys: PairSystem, r: int) -> list[list[int]]:
    """r solution tuples whose first coordinates extend span(a) to rank M + r.

    V's echelon basis is scanned in order and each vector that raises the
    rank is taken, so the output is deterministic and nested in r.
    """
    if r < 1 or r > sys.max_r:
        raise NoSubcodeError(
            f"r = {r} outside 1 <= r <= dim V - M = {sys.V.dim} - {sys.M} = {sys.max_r}"
        )
    if len(sys._reps) < r:
        span = F2Subspace(sys.a, sys.field.m)
        reps = []
        for v in reversed(sys.V.basis):
            if len(reps) == sys.max_r:
                break
            if v not in span:
                span = span.join([v])
                reps.append(_lift(sys, v))
        for b in reps:
            if pair_rank(sys.field, sys.a, b) != 2 * sys.M:
                raise ConsistencyError(f"solution {b} has rank below 2M = {2 * sys.M}")
        sys._reps = reps
    return [list(b) for b in sys._reps[:r]]


def min_weight_subcode(sys: PairSystem, r: int) -> PolySubcode:
    reps = select_representatives(sys, r)
    D = PolySubcode([r_from_pairs(sys.field, sys.a, b, sys.h) for b in reps], sys.h)
    d1 = min_weight_formula(sys.field.m, sys.h)
    if D.word_dimension != r:
        raise ConsistencyError(f"subcode words span dimension {D.word_dimension} < {r}")
    for R, word in D.span():
        if word.weight != d1:
            raise ConsistencyError(f"word of {R!r} has weight {word.weight}, expected {d1}")
    return D


def fiber_structure_check(sys: PairSystem) -> bool:
    """Solutions sharing b_1 differ in their tails by (a_2..a_M) A with A symmetric,
    every symmetric A occurs, and dim V = dim S - M(M-1)/2."""
    field, M, a = sys.field, sys.M, sys.a
    if sys.V.dim != sys.S.dim - M * (M - 1) // 2:
        return False
    if M == 1:
        return True
    proj = F2Matrix.from_columns([v & field.mask for v in sys.S.basis], field.m)
    fibre = []
    for c in proj.kernel().basis:
        v = 0
        for i, s in enumerate(sys.S.basis):
            if c >> i & 1:
                v ^= s
        fibre.append(v)
    tail_basis = F2Matrix.from_columns(list(a[1:]), field.m)
    for v in fibre:
        tail = sys.solution(v)[1:]
        A = []
        for d in tail:
            sol = tail_basis.solve_affine(d)
            if sol is None:
                return False
            A.append(sol[0])  # column k of A: coefficients of a_2..a_M in the k-th tail
        n = M - 1
        for i in range(n):
            for k in range(n):
                if (A[k] >> i & 1) != (A[i] >> k & 1):
                    return False
    # every symmetric A gives a solution with b_1 = 0
    S = sys.S
    for i in range(M - 1):
        for k in range(i, M - 1):
            tail = [0] * (M - 1)
            tail[k] ^= a[1 + i]
            if i != k:
                tail[i] ^= a[1 + k]
            if flatten(field, [0] + tail) not in S:
                return False
    return True


def count_solutions_exhaustive(sys: PairSystem, max_ops: int = 1 << 22) -> int:
    """|S| by enumerating F_q^M, using per-coordinate tables of each equation."""
    field, M = sys.field, sys.M
    q = field.q
    if q ** M > max_ops:
        raise CostGuardError(f"enumerating q^M = 2^{field.m * M} tuples exceeds budget {max_ops}")
    js = list(sys.j_range)
    if not js:
        return q ** M
    xs = field.all_elements
    # tables[i][n][x] = a_i^(2^j_n) x + a_i x^(2^j_n)
    tables = []
    for ai in sys.a:
        per_j = []
        for j in js:
            per_j.append(field.vmul(xs, field.frobenius(ai, j)) ^ field.vmul(field.vfrobenius(xs, j), ai))
        tables.append(np.stack(per_j))
    last = tables[-1]
    count = 0
    for prefix in np.ndindex(*([q] * (M - 1))):
        acc = np.zeros(len(js), dtype=np.uint64)
        for i, x in enumerate(prefix):
            acc ^= tables[i][:, x]
        count += int(np.all(last == acc[:, None], axis=0).sum())
    return count


def even_m_solution_count(field: GF2m, a2: Scalar) -> int:
    """|S| for the M = 2, h = (m-4)/2 system with a = (1, a2), a2 in F_4 - F_2."""
    m = field.m
    if m % 2 or m < 6:
        raise ValueError(f"needs even m >= 6, got {m}")
    a2 = as_bits(field, a2)
    if field.mul(a2, a2) ^ a2 ^ 1:
        raise ValueError(f"{a2:#x} is not a root of x^2 + x + 1")
    sys = build_system([1, a2], (m - 4) // 2, field)
    return 1 << sys.S.dim
