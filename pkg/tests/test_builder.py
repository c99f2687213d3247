import random

import pytest

from tracecurves.builder import (
    NoSubcodeError,
    build_preset_system,
    build_system,
    count_solutions_exhaustive,
    even_m_solution_count,
    fiber_structure_check,
    membership_check,
    min_weight_subcode,
    preset_tuple,
    r_from_pairs,
    select_representatives,
    system_shape,
    word_of_form,
)
from tracecurves.codes import TraceCode, min_weight_formula
from tracecurves.errors import ConsistencyError
from tracecurves.f2linalg import F2Subspace
from tracecurves.field import GF2m
from tracecurves.linearized import flatten
from tracecurves.quadratic import pair_form


def in_code(code, a, b):
    """Oracle: is the pair-form word in the span of the code's generator words?"""
    span = F2Subspace(code.word_basis, code.length)
    return word_of_form(pair_form(code.field, a, b)).bits in span


def test_shapes():
    assert system_shape(7, 2) == (3, 2, range(3, 4))
    assert system_shape(9, 2) == (3, 3, range(3, 5))
    assert system_shape(8, 2) == (4, 2, range(3, 5))
    with pytest.raises(ValueError):
        system_shape(8, 4)


@pytest.mark.parametrize("m, h", [(5, 1), (6, 1)])
def test_solution_space_is_exactly_the_members(m, h):
    f = GF2m(m)
    sys = build_preset_system(f, h)
    code = TraceCode(f, h)
    assert sys.M == 2
    first = set()
    for b1 in range(f.q):
        for b2 in range(f.q):
            b = [b1, b2]
            member = flatten(f, b) in sys.S
            assert membership_check(f, sys.a, b, h) == member
            assert in_code(code, sys.a, b) == member
            if member:
                first.add(b1)
    assert set(sys.V.elements()) == first


def test_random_violating_pairs_m7():
    f = GF2m(7)
    sys = build_preset_system(f, 1)
    code = TraceCode(f, 1)
    rng = random.Random(9)
    checked = 0
    while checked < 20:
        b = [rng.randrange(f.q) for _ in range(sys.M)]
        if flatten(f, b) in sys.S:
            continue
        checked += 1
        assert not membership_check(f, sys.a, b, 1)
        assert not in_code(code, sys.a, b)
        with pytest.raises(ConsistencyError):
            r_from_pairs(f, sys.a, b, 1)


@pytest.mark.parametrize("m, h, preset, dims", [
    (7, 2, None, (7, 6, 4)),
    (9, 2, "subfield-F8", (12, 9, 6)),
    (9, 2, "powers", (9, 6, 3)),
])
def test_system_dimensions(m, h, preset, dims):
    sys = build_preset_system(GF2m(m), h, preset)
    assert (sys.S.dim, sys.V.dim, sys.max_r) == dims
    assert fiber_structure_check(sys)


@pytest.mark.parametrize("m, h, preset", [(5, 1, None), (6, 1, None), (7, 2, None), (9, 2, "subfield-F8")])
def test_solution_count_by_enumeration(m, h, preset):
    sys = build_preset_system(GF2m(m), h, preset)
    if GF2m(m).q ** sys.M <= 1 << 22:
        assert count_solutions_exhaustive(sys) == 1 << sys.S.dim


def test_representatives_are_nested_and_give_minimum_words():
    f = GF2m(7)
    sys = build_preset_system(f, 2)
    reps = [select_representatives(sys, r) for r in range(1, 5)]
    for small, big in zip(reps, reps[1:]):
        assert big[: len(small)] == small
    D = min_weight_subcode(sys, 4)
    assert all(w.weight == min_weight_formula(7, 2) for _, w in D.span())
    with pytest.raises(NoSubcodeError):
        select_representatives(sys, 5)


def test_even_counts_both_roots():
    f = GF2m(8)
    roots = [x for x in f.subfield(2) if x > 1]
    assert [even_m_solution_count(f, a2) for a2 in roots] == [32, 32]
    with pytest.raises(ValueError):
        even_m_solution_count(f, 2)


def test_bad_tuples():
    f = GF2m(7)
    with pytest.raises(ValueError, match="a_1"):
        build_system([2, 1], 2, f)
    with pytest.raises(ValueError, match="dependent"):
        build_system([1, 1], 2, f)
    with pytest.raises(ValueError):
        build_system([1, 2, 4], 2, f)


def test_presets():
    f = GF2m(6)
    one, g, g2 = preset_tuple("subfield-F8", f, 3)
    assert f.pow(g, 8) == g and g2 == f.square(g) and one == 1
    _, rho = preset_tuple("f4-element", f, 2)
    assert f.mul(rho, rho) ^ rho == 1
    with pytest.raises(ValueError):
        preset_tuple("subfield-F8", GF2m(7), 3)
    with pytest.raises(ValueError):
        preset_tuple("nope", f, 2)


def test_json_is_stable():
    sys = build_preset_system(GF2m(7), 2)
    assert sys.to_json() == {
        "a": ["0x1", "0x2"], "preset": "powers", "h": 2, "w": 3, "M": 2,
        "j_range": [3], "dim_S": 7, "dim_V": 6, "max_r": 4,
    }
