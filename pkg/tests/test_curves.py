import random

import pytest

from tracecurves.builder import build_preset_system, preset_tuple, select_representatives, r_from_pairs
from tracecurves.codes import PolySubcode
from tracecurves.curves import (
    CurveSummary,
    affine_point_count_oracle,
    case_h,
    case_of,
    curve_of,
    fibre_product,
    genus_of,
    hasse_weil_bound,
    row_formula,
    serre_bound,
    table_row,
)
from tracecurves.errors import ConsistencyError, CostGuardError
from tracecurves.field import GF2m
from tracecurves.linearized import LinearizedPoly


def first_min_poly(field, h, preset=None):
    sys = build_preset_system(field, h, preset)
    (b,) = select_representatives(sys, 1)
    return r_from_pairs(field, sys.a, b, h)


def test_bounds():
    assert serre_bound(10, 128) == 349
    assert serre_bound(2, 512) == 603
    assert serre_bound(0, 64) == 65
    assert hasse_weil_bound(4, 64) == 129
    assert hasse_weil_bound(2, 128) is None


def test_genus():
    f = GF2m(6)
    assert genus_of(LinearizedPoly(f, [5])) == 0
    assert genus_of(LinearizedPoly(f, [5, 0, 0, 1])) == 4
    with pytest.raises(ValueError):
        genus_of(LinearizedPoly(f, [0, 0]))


def test_vanishing_monomial_curve_is_maximal():
    f = GF2m(6)
    b = preset_tuple("subfield-F8", f, 3)[1]
    c = curve_of(LinearizedPoly.monomial(f, b, 3))
    assert (c.genus, c.trace_frobenius, c.n_points) == (4, -64, 129)
    assert c.attains_hasse_weil


def test_m7_minimum_word_curve():
    c = curve_of(first_min_poly(GF2m(7), 2))
    assert (c.genus, c.n_points) == (2, 161)
    assert not c.attains_serre


@pytest.mark.parametrize("m, h, points", [(8, 3, 385), (7, 2, 161), (6, 2, 97)])
def test_affine_oracle_on_minimum_words(m, h, points):
    R = first_min_poly(GF2m(m), h)
    assert affine_point_count_oracle(R) + 1 == points == curve_of(R).n_points


def test_affine_oracle_random():
    rng = random.Random(2)
    for m in (3, 4, 5, 10):
        f = GF2m(m)
        for _ in range(10):
            R = LinearizedPoly(f, [rng.randrange(f.q) for _ in range(m // 2 + 1)])
            if R.is_zero():
                continue
            # count solutions of y^2 + y = c by brute force over y
            sols = sum(1 for x in range(f.q) for y in range(f.q) if f.square(y) ^ y == f.mul(x, R(x))) \
                if m <= 5 else affine_point_count_oracle(R)
            assert curve_of(R).n_points == sols + 1


def test_oracle_guard():
    with pytest.raises(CostGuardError):
        affine_point_count_oracle(LinearizedPoly(GF2m(17), [1]))


def test_fibre_product_sums():
    f = GF2m(7)
    sys = build_preset_system(f, 2)
    reps = select_representatives(sys, 2)
    D = PolySubcode([r_from_pairs(f, sys.a, b, 2) for b in reps], 2)
    c = fibre_product(D)
    assert (c.genus, c.n_points) == (6, 225)
    parts = [curve_of(R) for R, _ in D.span()]
    assert c.genus == sum(p.genus for p in parts)
    assert c.trace_frobenius == sum(p.trace_frobenius for p in parts)


def test_fibre_product_rejects_rational_members():
    f = GF2m(5)
    D = PolySubcode([LinearizedPoly(f, [1, 0]), LinearizedPoly(f, [0, 1])])
    with pytest.raises(ValueError, match="rational"):
        fibre_product(D)


def test_from_points_guards_the_bound():
    with pytest.raises(ConsistencyError):
        CurveSummary.from_points(128, 2, 174)
    assert CurveSummary.from_points(128, 2, 173).attains_serre


def test_cases():
    assert [case_h(c, 9) for c in ("I", "II", "III")] == [4, 3, 2]
    assert [case_h(c, 8) for c in ("I", "II")] == [3, 2]
    assert case_of(7, 2) == "II" and case_of(7, 3) == "I" and case_of(6, 1) == "II"
    assert case_of(5, 0) is None
    with pytest.raises(ValueError):
        case_h("III", 8)


def test_table_rows():
    f = GF2m(7)
    rows = [table_row("II", r, f) for r in range(1, 5)]
    assert [(c.genus, c.n_points) for c in rows] == [(2, 161), (6, 225), (14, 353), (30, 609)]
    assert [c.serre_bound for c in rows] == [173, 261, 437, 789]
    with pytest.raises(ValueError):
        table_row("II", 5, f)
    assert row_formula(8, 3, 3).attains_hasse_weil
    with pytest.raises(ValueError):
        table_row("II", 1, GF2m(6))
    assert table_row("I", 2, GF2m(6), r_max=2).n_points == 161
