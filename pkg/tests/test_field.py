import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tracecurves.field import DEFAULT_MODULI, FieldElement, FieldError, GF2m, field_new, irreducible_polys


def shift_mul(field, a, b):
    """Multiply by shifting a through t, t^2, ... with reduction at each step."""
    out = 0
    for i in range(field.m):
        if b >> i & 1:
            out ^= a
        a <<= 1
        if a >> field.m:
            a ^= field.modulus
    return out


def brute_irreducible(f):
    m = f.bit_length() - 1
    # f is reducible iff it is a product of two polynomials of positive degree
    for g in range(2, 1 << m):
        for h in range(2, 1 << m):
            if (g.bit_length() - 1) + (h.bit_length() - 1) != m:
                continue
            prod = 0
            for i in range(h.bit_length()):
                if h >> i & 1:
                    prod ^= g << i
            if prod == f:
                return False
    return True


def test_default_modulus_degree3(f8):
    assert f8.modulus == 0b1011


def test_default_table_is_smallest_irreducible():
    for m in range(2, 8):
        candidates = [f for f in range((1 << m), 1 << (m + 1)) if brute_irreducible(f)]
        assert DEFAULT_MODULI[m] == candidates[0]
    for m in range(8, 25):
        assert DEFAULT_MODULI[m] == next(irreducible_polys(m))


def test_alternative_modulus_accepted():
    assert GF2m(3, 0b1101).modulus == 0b1101


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError, match="reducible"):
        GF2m(4, 0b10101)  # (t^2+t+1)^2


@pytest.mark.parametrize("m, modulus", [(4, 0b1011), (1, None), (25, None), (3, 0b110)])
def test_bad_construction(m, modulus):
    with pytest.raises(FieldError):
        field_new(m, modulus)


def test_f8_products(f8):
    t = f8.element(0b10)
    assert (t * t * t).bits == 0b011  # t^3 = t + 1
    assert (t * f8.element(0b100)).bits == 0b011


def test_mul_matches_shift_oracle():
    rng = random.Random(1)
    for m in (3, 5, 8, 13, 24):
        f = GF2m(m)
        for _ in range(200):
            a, b = rng.randrange(f.q), rng.randrange(f.q)
            assert f.mul(a, b) == shift_mul(f, a, b)


def test_vectorized_mul_matches_scalar():
    f = GF2m(9)
    xs = f.all_elements
    ys = xs[::-1].copy()
    got = f.vmul(xs, ys)
    assert all(int(got[i]) == f.mul(i, int(ys[i])) for i in range(f.q))
    assert all(int(v) == f.mul(i, 0x155) for i, v in enumerate(f.vmul(xs, 0x155)))


def test_field_axioms_small(f8):
    for x in range(8):
        assert f8.mul(x, 1) == x
        assert x ^ x == 0
        if x:
            assert f8.mul(x, f8.inv(x)) == 1
        for y in range(8):
            assert f8.square(x ^ y) == f8.square(x) ^ f8.square(y)


def test_mixed_fields_rejected():
    a = GF2m(3).element(3)
    b = GF2m(3, 0b1101).element(3)
    with pytest.raises(FieldError):
        a + b
    with pytest.raises(FieldError):
        a * b


def test_frobenius(f8):
    t = f8.element(2)
    assert t.frobenius(0) == t
    assert t.frobenius(3) == t
    assert t.frobenius(1).bits == 0b100


def test_inv_frobenius(f8):
    t = f8.element(2)
    # t^(2^(m-1)) = t^4 = t * t^3 = t^2 + t
    assert t.inv_frobenius(1).bits == 0b110
    assert f8.inv_frobenius(0, 5) == 0
    for x in range(8):
        assert f8.inv_frobenius(f8.square(x), 1) == x


@settings(max_examples=200)
@given(st.integers(2, 16), st.data())
def test_frobenius_round_trip(m, data):
    f = GF2m(m)
    x = data.draw(st.integers(0, f.q - 1))
    j = data.draw(st.integers(0, 40))
    assert f.inv_frobenius(f.frobenius(x, j), j) == x
    assert f.frobenius(f.inv_frobenius(x, j), j) == x


def test_trace_values(f8):
    assert f8.trace(0) == 0
    assert f8.trace(1) == 1


@pytest.mark.parametrize("m", range(2, 13))
def test_trace_balanced_linear_and_frobenius_invariant(m):
    f = GF2m(m)
    tr = f.vtrace(f.all_elements)
    assert int(tr.sum()) == f.q // 2
    assert np.array_equal(tr, f.vtrace(f.vfrobenius(f.all_elements, 1)))
    # matches the defining sum x + x^2 + ... + x^(2^(m-1))
    rng = random.Random(m)
    for _ in range(50):
        x, y = rng.randrange(f.q), rng.randrange(f.q)
        s, p = 0, x
        for _ in range(m):
            s ^= p
            p = f.square(p)
        assert s == f.trace(x)
        assert f.trace(x ^ y) == f.trace(x) ^ f.trace(y)


def test_subfield_elements():
    f = GF2m(6)
    assert len(f.subfield(2)) == 4 and len(f.subfield(3)) == 8
    assert all(f.pow(x, 8) == x for x in f.subfield(3))
    with pytest.raises(FieldError):
        f.subfield(4)


def test_serialization_roundtrip():
    f = GF2m(7)
    assert f.to_json() == {"m": 7, "modulus": "0x83"}
    assert GF2m.from_json(f.to_json()) == f
    assert f.element(0x1B).hex() == "0x1b"


def test_element_rejects_out_of_range(f8):
    with pytest.raises(FieldError):
        FieldElement(f8, 8)
