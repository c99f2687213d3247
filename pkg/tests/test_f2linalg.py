import itertools
import random

import pytest
from hypothesis import given, strategies as st

from tracecurves.f2linalg import F2Matrix, F2Subspace, rank_of


def brute_kernel_size(M):
    return sum(1 for v in range(1 << M.ncols) if M.apply(v) == 0)


def test_identity_kernel_trivial():
    assert F2Matrix.identity(6).kernel().dim == 0


def test_zero_matrix_kernel_full():
    assert F2Matrix.zeros(5, 5).kernel().dim == 5


@given(st.lists(st.integers(0, 255), min_size=5, max_size=5))
def test_rank_nullity_random_5x8(rows):
    M = F2Matrix(rows, 8)
    K = M.kernel()
    assert M.rank() + K.dim == 8
    assert len(K) == brute_kernel_size(M)
    assert all(M.apply(v) == 0 for v in K.basis)


@given(st.lists(st.integers(0, 1023), min_size=1, max_size=8))
def test_rref_idempotent(rows):
    M = F2Matrix(rows, 10)
    R1, p1 = M.rref()
    R2, p2 = R1.rref()
    assert R1 == R2 and p1 == p2
    assert M.rank() == rank_of(rows)


@given(st.lists(st.integers(0, 63), min_size=1, max_size=7), st.integers(0, 127))
def test_solve_affine(rows, rhs):
    M = F2Matrix(rows, 6)
    rhs &= (1 << len(rows)) - 1
    sol = M.solve_affine(rhs)
    reachable = {M.apply(v) for v in range(64)}
    if sol is None:
        assert rhs not in reachable
    else:
        v, K = sol
        assert M.apply(v) == rhs
        assert K == M.kernel()


def test_inconsistent_distinct_from_empty_kernel():
    M = F2Matrix([0b01, 0b01], 2)  # rows equal: needs rhs bits equal
    assert M.solve_affine(0b10) is None
    v, K = F2Matrix.identity(2).solve_affine(0b10)
    assert v == 0b10 and K.dim == 0


def test_columns_roundtrip():
    rng = random.Random(3)
    rows = [rng.randrange(1 << 7) for _ in range(4)]
    M = F2Matrix(rows, 7)
    assert F2Matrix.from_columns(M.columns(), 4) == M


@given(st.lists(st.integers(0, 511), max_size=6), st.integers(0, 511))
def test_subspace_membership(vectors, probe):
    S = F2Subspace(vectors, 9)
    span = set()
    for coeffs in itertools.product((0, 1), repeat=len(vectors)):
        acc = 0
        for c, v in zip(coeffs, vectors):
            if c:
                acc ^= v
        span.add(acc)
    assert len(S) == len(span)
    assert (probe in S) == (probe in span)
    assert set(S.elements()) == span
    assert rank_of(S.basis) == S.dim


def test_bad_row_width():
    with pytest.raises(ValueError):
        F2Matrix([0b1000], 3)
