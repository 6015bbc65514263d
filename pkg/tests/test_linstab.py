from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenseq.linstab import (
    CentralCharge,
    classical_b,
    is_semistable,
    is_stable,
    linearity_decide,
    linearity_sweep,
    slope,
    stable_set,
)
from greenseq.mutation import enumerate_mgs
from greenseq.paths import crossings
from greenseq.quivercore import linear_a
from greenseq.repmod import is_schurian
from greenseq.walls import in_D, wall_of


def test_slope_examples():
    z = CentralCharge((0, 1), (1, 1))
    assert slope(z, (1, 0)) == 0 and slope(z, (1, 1)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        slope(z, (0, 0))
    with pytest.raises(ValueError):
        CentralCharge((0, 1), (1, 0))
    assert classical_b(linear_a(2)) == (1, 1)


def test_stability_examples(a2_pool):
    P1 = a2_pool.by_name("1>2")
    assert is_stable(CentralCharge((0, 1), (1, 1)), P1)
    assert not is_semistable(CentralCharge((1, 0), (1, 1)), P1)
    for name in ("S1", "S2"):
        assert is_stable(CentralCharge((5, -3), (1, 2)), a2_pool.by_name(name))


def test_stable_sets(a2_pool, lam1_pool):
    assert stable_set(CentralCharge((0, 1), (1, 1)), a2_pool).entries == [
        ("S1", 0), ("1>2", Fraction(1, 2)), ("S2", 1)
    ]
    assert stable_set(CentralCharge((1, 0), (1, 1)), a2_pool).keys == ["S2", "S1"]
    ss = stable_set(CentralCharge((0, 0, 0), (1, 1, 1)), lam1_pool)
    assert len(ss.entries) == 6 and ss.equal_slopes


def test_linearity_examples(a2_pool):
    S1, S2, P1 = (a2_pool.by_name(k) for k in ("S1", "S2", "1>2"))
    v = linearity_decide([S1, P1, S2], (1, 1), a2_pool)
    assert v.status == "Linear" and v.witness.a[0] < v.witness.a[1]
    assert linearity_decide([S2, S1], (1, 1), a2_pool).status == "Linear"
    v = linearity_decide([S1, S2], (1, 1), a2_pool)
    assert v.status == "Unknown" and v.counterexample == "1>2"
    assert linearity_decide([P1, S1], (1, 1), a2_pool).status == "NotRealized"


@given(seed=st.integers(0, 10**6))
def test_semistable_iff_in_wall(seed, a3_pool):
    rng = random.Random(seed)
    a = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3))
    b = tuple(Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(3))
    z = CentralCharge(a, b)
    for M in a3_pool:
        t = slope(z, M.dims)
        point = tuple(t * y - x for x, y in zip(a, b))
        assert is_semistable(z, M) == in_D(point, wall_of(M))
        if is_stable(z, M):
            assert is_schurian(M)


def test_witnesses_replay_as_green_paths(a3_pool):
    q = linear_a(3)
    walls = [wall_of(M) for M in a3_pool]
    for m in enumerate_mgs(q, 10):
        seq = [next(M for M in a3_pool if M.dims == c) for c in m.c_vectors]
        v = linearity_sweep(seq, a3_pool)
        assert v.status == "Linear"
        cr = crossings(v.witness.path(), walls)
        assert [c.dim for c in cr] == list(m.c_vectors)
        assert all(c.green for c in cr)
