from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenseq.exactmath import Surd, dot, sign
from greenseq.mutation import enumerate_mgs
from greenseq.paths import (
    DegeneratePath,
    NonlinearZ,
    OneSided,
    PLPath,
    SimultaneousCrossings,
    crossings,
    mu,
    path_from_z,
    slope_derivative,
    synthesize_path_from_mgs,
    validate_reddening,
    z_crossings,
    z_from_path,
)
from greenseq.quivercore import kronecker, linear_a
from greenseq.repmod import kronecker_band
from greenseq.walls import in_D, wall_of


@pytest.fixture(scope="module")
def a2_walls(a2_pool):
    return [wall_of(m) for m in a2_pool]


LONG = PLPath([0, 1], [(-1, -2), (2, 1)])
SHORT = PLPath([0, 1], [(-2, -1), (1, 2)])


def test_long_a2_path(a2_walls):
    assert validate_reddening(LONG, a2_walls).valid
    cr = crossings(LONG, a2_walls)
    assert [c.dim for c in cr] == [(1, 0), (1, 1), (0, 1)]
    assert [c.point for c in cr] == [(0, -1), (Fraction(1, 2), Fraction(-1, 2)), (1, 0)]
    assert all(c.color == "green" for c in cr)


def test_short_a2_path(a2_walls):
    cr = crossings(SHORT, a2_walls)
    assert [(c.module_key, c.point) for c in cr] == [("S2", (-1, 0)), ("S1", (0, 1))]


def test_subpool(a2_walls):
    cr = crossings(LONG, [w for w in a2_walls if w.module_key == "S1"])
    assert [c.module_key for c in cr] == ["S1"]


def test_invalid_paths(a2_walls):
    bad = PLPath([0, 1], [(-1, 2), (-1, 3)])
    assert validate_reddening(bad, a2_walls).reason == "endpoint-sign"
    # from (-1, 1) with velocity (1, -1): slides along the hyperplane of (1, 1)
    tangent = PLPath([0, 1, 2, 3], [(-3, -1), (-1, 1), (0, 0), (2, 3)])
    res = validate_reddening(tangent, a2_walls)
    assert not res.valid and res.reason in ("tangent", "degenerate")


def test_simultaneous_crossings(a2_walls):
    # through the origin: every wall at once
    with pytest.raises((SimultaneousCrossings, DegeneratePath)):
        crossings(PLPath([0, 1], [(-1, -1), (1, 1)]), a2_walls)


def test_linear_slopes():
    z = NonlinearZ.linear((0, 1), (1, 1))
    for t in (Fraction(-3), Fraction(0), Fraction(7, 2)):
        assert mu(z, (1, 0), t) == 0
        assert mu(z, (1, 1), t) == Fraction(1, 2)
        assert mu(z, (0, 1), t) == 1
        assert slope_derivative(z, (0, 1), t) == 0


def test_linear_charges_are_green(a2_walls):
    z = NonlinearZ.linear((0, 1), (1, 1))
    cr = z_crossings(z, a2_walls)
    assert [c.dim for c in cr] == [(1, 0), (1, 1), (0, 1)]
    assert all(c.color == "green" for c in cr)


def test_one_sided_derivative_at_breakpoint():
    a = PLPath([0, 1], [(0, 0), (1, 0)], "constant")
    b = PLPath([0], [(1, 1)], "constant")
    z = NonlinearZ(a, b)
    d = slope_derivative(z, (1, 0), Fraction(1))
    assert isinstance(d, OneSided) and d.left == 1 and d.right == 0


def test_z_from_path_roundtrip():
    z = z_from_path(LONG, (1, 1))
    g = path_from_z(z)
    for t in (Fraction(k, 4) for k in range(-40, 41)):
        if g.times[0] <= t <= g.times[-1]:
            assert g(t) == z.gamma(t)
    # the charge's crossings reproduce the path's
    walls = [wall_of(m) for m in __import__("greenseq").enumerate_indecomposables(linear_a(2))]
    assert [c.dim for c in z_crossings(z, walls)] == [c.dim for c in crossings(LONG, walls)]


def test_z_from_linear_path():
    z = z_from_path(PLPath([0, 1], [(0, 0), (1, 1)]), (1, 1))
    assert all(z.a(Fraction(t)) == (0, 0) for t in range(-5, 6))


def test_endpoint_signs():
    z = z_from_path(LONG, (1, 1))
    lo, hi = z.breakpoints[0] - 1, z.breakpoints[-1] + 1
    assert all(x < 0 for x in z.gamma(lo)) and all(x > 0 for x in z.gamma(hi))


@pytest.mark.parametrize("q", [linear_a(1), linear_a(2), linear_a(3)])
def test_synthesis(q):
    for m in enumerate_mgs(q, 10):
        path = synthesize_path_from_mgs(q, m)
        walls = [wall_of(M) for M in __import__("greenseq").enumerate_indecomposables(q)]
        cr = crossings(path, walls)
        assert [c.dim for c in cr] == list(m.c_vectors)
        assert all(c.green for c in cr)


def test_kronecker_path_avoids_band():
    q = kronecker()
    m = enumerate_mgs(q, 6).sequences[0]
    path = synthesize_path_from_mgs(q, m)
    w = wall_of(kronecker_band(q, 1))
    # the only candidate times are where gamma(t) is perpendicular to (1,1)
    for piece in path.pieces():
        a0, a1 = dot(piece.c0, (1, 1)), dot(piece.c1, (1, 1))
        if a1 != 0:
            t = -a0 / a1
            if (piece.lo is None or piece.lo <= t) and (piece.hi is None or t <= piece.hi):
                assert not in_D(path(t), w)


def _random_z(rng, n):
    times = sorted(rng.sample(range(-6, 7), rng.randint(1, 3)))
    a = PLPath(times, [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)) for _ in times],
               "constant")
    bt = sorted(rng.sample(range(-6, 7), rng.randint(1, 2)))
    b = PLPath(bt, [tuple(Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(n)) for _ in bt],
               "constant")
    return NonlinearZ(a, b)


@given(seed=st.integers(0, 10**6))
def test_crossing_sign_equivalence(a2_walls, seed):
    rng = random.Random(seed)
    z = _random_z(rng, 2)
    try:
        cr = z_crossings(z, a2_walls, allow_breakpoints=True)
    except (DegeneratePath, SimultaneousCrossings):
        return
    for c in cr:
        der = slope_derivative(z, c.dim, c.time)
        if isinstance(der, OneSided):
            continue
        s = 1 if c.color == "green" else -1
        assert s == sign(1 - der)


def test_surd_crossing_times_are_exact(a2_walls):
    # b_t = (1 + t, 1) on [0, 2] makes mu_t(S1) = t quadratic: t^2 + t - 1 = 0
    a = PLPath([0], [(1, 0)], "constant")
    b = PLPath([0, 2], [(1, 1), (3, 1)], "constant")
    z = NonlinearZ(a, b)
    cr = z_crossings(z, a2_walls, allow_breakpoints=True)
    s1 = [c for c in cr if c.module_key == "S1"]
    assert len(s1) == 1
    t = s1[0].time
    assert isinstance(t, Surd) and t * t + t - 1 == 0
    assert s1[0].color == "green"


def test_pl_serialization():
    assert PLPath.from_dict(LONG.to_dict()).same_function(LONG)
