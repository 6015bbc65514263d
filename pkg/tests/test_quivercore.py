from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenseq.quivercore import (
    NonHereditaryError,
    Quiver,
    QuiverError,
    affine_a,
    b2,
    cyclic_a3,
    euler_pairing,
    exchange_matrix,
    g_from_dim,
    g_shifted_projective,
    initial_seed,
    kronecker,
    linear_a,
)
from greenseq.repmod import enumerate_indecomposables, ext1_dim, hom_dim


def test_constructors():
    assert linear_a(3).arrows == ((1, 2), (2, 3))
    assert kronecker().arrows == ((1, 2), (1, 2))
    assert cyclic_a3(2).radical_truncation == 2
    assert affine_a(2, 1).n == 3
    assert b2().valuations == (1, 2)


def test_cycle_needs_truncation():
    with pytest.raises(QuiverError):
        Quiver(3, ((1, 2), (2, 3), (3, 1)))


def test_non_hereditary_flag():
    with pytest.raises(NonHereditaryError):
        cyclic_a3(1).require_hereditary()
    assert linear_a(2).hereditary and not cyclic_a3(1).hereditary


@pytest.mark.parametrize("q", [linear_a(3), kronecker(), cyclic_a3(2), b2()])
def test_json_roundtrip(q):
    assert Quiver.from_json(q.to_json()) == q


def test_g_from_dim_a2():
    q = linear_a(2)
    assert g_from_dim(q, (1, 0)) == (1, -1)
    assert g_from_dim(q, (0, 1)) == (0, 1)
    # the projective P1 = 1>2 has g-vector e_1
    assert g_from_dim(q, (1, 1)) == (1, 0)


def test_b2_values():
    q = b2()
    assert g_shifted_projective(q, 1) == (-1, 0)
    assert g_from_dim(q, (0, 1)) == (-2, 2)
    assert g_from_dim(q, (1, 1)) == (-1, 2)
    assert sum(a * b for a, b in zip(g_from_dim(q, (1, 1)), (1, 2))) == 3


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_g_linear(d, e):
    for q in (linear_a(3), affine_a(2, 1)):
        s = tuple(a + b for a, b in zip(d, e))
        assert g_from_dim(q, s) == tuple(a + b for a, b in zip(g_from_dim(q, d), g_from_dim(q, e)))


@pytest.mark.parametrize("q", [linear_a(2), linear_a(3), linear_a(4)])
def test_euler_equals_hom_minus_ext(q):
    pool = enumerate_indecomposables(q)
    for M in pool:
        for N in pool:
            assert euler_pairing(q, M.dims, N.dims) == hom_dim(M, N) - ext1_dim(M, N)


def test_euler_affine_strings():
    q = affine_a(2, 1)
    pool = enumerate_indecomposables(q, 4)
    for M in pool:
        for N in pool:
            assert euler_pairing(q, M.dims, N.dims) == hom_dim(M, N) - ext1_dim(M, N)


@pytest.mark.parametrize("q", [linear_a(3), kronecker(), b2(), affine_a(2, 1)])
def test_initial_seed_invariants(q):
    s = initial_seed(q)
    s.check()
    B = exchange_matrix(q)
    assert s.B == B


def test_b2_exchange_matrix():
    B = exchange_matrix(b2())
    D = (1, 2)
    assert all(D[i] * B[i][j] == -D[j] * B[j][i] for i in range(2) for j in range(2))
