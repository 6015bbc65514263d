from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenseq.exactmath import matmul, transpose
from greenseq.mutation import (
    MGS,
    chamber_atlas,
    enumerate_mgs,
    green_vertices,
    is_sign_coherent,
    is_terminal,
    mutate,
    seeds_along,
)
from greenseq.quivercore import affine_a, b2, initial_seed, kronecker, linear_a

QUIVERS = [linear_a(2), linear_a(3), kronecker(), b2(), affine_a(2, 1)]


def _walk(q, steps, rng):
    s = initial_seed(q)
    out = [s]
    for _ in range(steps):
        s = mutate(s, rng.randint(1, q.n))
        out.append(s)
    return out


def _duality(s):
    # G^T C = -diag(f)
    prod = matmul(transpose(s.G), s.C)
    n = s.n
    return prod == [[-s.D[i] if i == j else 0 for j in range(n)] for i in range(n)]


@given(st.integers(0, 10**6), st.sampled_from(QUIVERS))
def test_involution_and_invariants(seed, q):
    rng = random.Random(seed)
    for s in _walk(q, 6, rng):
        s.check()
        assert _duality(s)
        for c in s.c_vectors():
            assert is_sign_coherent(c)
        for k in range(1, q.n + 1):
            assert mutate(mutate(s, k), k) == s


def test_a2_mgs():
    r = enumerate_mgs(linear_a(2), 10)
    got = sorted(tuple(m.c_vectors) for m in r)
    assert got == [((0, 1), (1, 0)), ((1, 0), (1, 1), (0, 1))]
    assert r.complete_up_to_cap


@pytest.mark.parametrize("q,count,longest", [(linear_a(2), 2, 3), (linear_a(3), 9, 6), (b2(), 2, 4)])
def test_counts(q, count, longest):
    r = enumerate_mgs(q, 12)
    assert len(r) == count and r.max_length == longest


def test_a4_counts():
    r = enumerate_mgs(linear_a(4), 12)
    assert len(r) == 98 and r.max_length == 10


def test_kronecker_capped():
    r = enumerate_mgs(kronecker(), 10)
    assert [m.c_vectors for m in r] == [((0, 1), (1, 0))]
    assert not r.complete_up_to_cap


def test_terminal_and_first_step():
    for q in (linear_a(3), affine_a(2, 1)):
        for m in enumerate_mgs(q, 12):
            seeds = seeds_along(q, m.mutation_vertices)
            assert is_terminal(seeds[-1])
            C = seeds[-1].C
            assert all(sum(1 for x in row if x == -1) == 1 and all(x in (0, -1) for x in row) for row in C)
            first = m.c_vectors[0]
            assert sorted(first) == [0] * (q.n - 1) + [1]


def test_green_vertices_initial():
    assert green_vertices(initial_seed(linear_a(3))) == [1, 2, 3]


def test_atlas_duality_a3():
    atlas = chamber_atlas(linear_a(3))
    assert len(atlas.chambers) == 14 and not atlas.partial


def test_mgs_serialization():
    m = MGS((2, 1), ((0, 1), (1, 0)))
    assert m.to_dict() == {"vertices": [2, 1], "c_vectors": [[0, 1], [1, 0]]}
    assert m.length == 2
