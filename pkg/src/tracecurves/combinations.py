"""Subcodes assembled from pieces of pair-form words.

A minimum weight word sum_i Tr(a_i x) Tr(b_i x) of C_h can be split into
groups of its pairs.  Each group is a word of a larger code C_h' (with h'
up to the middle exponent), and the span of the groups is a subcode whose
fibre product often has many points.
"""

from __future__ import annotations

from typing import Sequence

from .builder import build_preset_system, preset_tuple, r_from_pairs, select_representatives
from .codes import PolySubcode
from .field import GF2m
from .linearized import LinearizedPoly


def split_pair_subcode(field: GF2m, a: Sequence[int], b: Sequence[int],
                       groups: Sequence[Sequence[int]], h: int) -> PolySubcode:
    """Span of the R's of sum_{i in group} Tr(a_i x) Tr(b_i x), one per group."""
    basis = [
        r_from_pairs(field, [a[i] for i in g], [b[i] for i in g], h) for g in groups
    ]
    return PolySubcode(basis, h)


def split_min_word(field: GF2m, h: int, groups: Sequence[Sequence[int]], h_split: int,
                   preset: str | None = None) -> PolySubcode:
    """Split the first builder representative for C_h into groups living in C_{h_split}."""
    sys = build_preset_system(field, h, preset)
    (b,) = select_representatives(sys, 1)
    return split_pair_subcode(field, sys.a, b, groups, h_split)


def two_pair_split(field: GF2m) -> PolySubcode:
    """m odd, minimum weight word of C_{(m-3)/2} split into its two pairs, in C_{(m-1)/2}."""
    m = field.m
    return split_min_word(field, (m - 3) // 2, [[0], [1]], (m - 1) // 2)


def three_pair_split(field: GF2m) -> PolySubcode:
    """m odd, minimum weight word of C_{(m-5)/2}: first pair vs. the other two, in C_{(m-1)/2}."""
    m = field.m
    return split_min_word(field, (m - 5) // 2, [[0], [1, 2]], (m - 1) // 2)


def subfield_pair_subcode(field: GF2m) -> PolySubcode:
    """m = 6: Tr(x)Tr(bx) and Tr(x)Tr(b rho x) + Tr(rho x)Tr(bx), b in F_8 - F_2, rho in F_4 - F_2.

    Both words lie in C_2; the second already lies in C_1.
    """
    if field.m != 6:
        raise ValueError("this construction is specific to F_64")
    rho = preset_tuple("f4-element", field, 2)[1]
    b = preset_tuple("subfield-F8", field, 3)[1]
    c1 = r_from_pairs(field, [1], [b], 2)
    c2 = r_from_pairs(field, [1, rho], [field.mul(b, rho), b], 2)
    return PolySubcode([c1, c2], 2)


def vanishing_monomial_subcode(field: GF2m) -> PolySubcode:
    """m = 6: span of b x^8 (whose word is zero) and b x^8 + R_1, R_1 giving Tr(x)Tr(bx)."""
    if field.m != 6:
        raise ValueError("this construction is specific to F_64")
    b = preset_tuple("subfield-F8", field, 3)[1]
    mono = LinearizedPoly.monomial(field, b, 3)
    c1 = r_from_pairs(field, [1], [b], 3)
    return PolySubcode([mono, mono + c1], 3)
