from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from greenseq.exactmath import (
    ConeHRep,
    Constraint,
    DimensionCapError,
    Surd,
    cone_extreme_rays,
    det,
    dot,
    fm_solve,
    inverse,
    matmul,
    nullspace,
    primitive,
    quadratic_roots,
    rank,
    sign,
    strict_lp_feasible,
)

small = st.integers(-5, 5)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vec(n, elems=small):
    return st.lists(elems, min_size=n, max_size=n).map(tuple)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(vec(n, fracs), vec(n, fracs), vec(n))))
def test_dot_bilinear(xyd):
    x, y, d = xyd
    s = tuple(a + b for a, b in zip(x, y))
    assert dot(s, d) == dot(x, d) + dot(y, d)


def test_dot_length_mismatch():
    with pytest.raises(ValueError):
        dot((1, 2), (1, 2, 3))


def test_dot_example():
    assert dot((Fraction(1, 2), 0, -1), (2, 5, 1)) == 0


@given(st.integers(1, 4).flatmap(lambda n: st.lists(vec(n), min_size=1, max_size=4).map(lambda r: (n, r))))
def test_nullspace_annihilates(nr):
    n, rows = nr
    ker = nullspace(rows, n)
    assert len(ker) == n - rank(rows)
    for v in ker:
        assert all(dot(r, v) == 0 for r in rows)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(vec(n), min_size=n, max_size=n)))
def test_inverse_roundtrip(m):
    if det(m) == 0:
        return
    inv = inverse(m)
    n = len(m)
    assert matmul(m, inv) == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_primitive():
    assert primitive((Fraction(2, 3), Fraction(-4, 3))) == (1, -2)


def test_cone_rays_half_plane_line():
    # the hyperplane (1,1,0)^perp cut by x.(0,1,0) <= 0: one lineality direction, one ray
    lin, rays = cone_extreme_rays(ConeHRep(((1, 1, 0),), ((0, 1, 0),)))
    assert lin == [(0, 0, 1)]
    assert rays == [(1, -1, 0)]


def test_cone_rays_single_ray():
    cone = ConeHRep(((1, 1, 1),), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1)))
    lin, rays = cone_extreme_rays(cone)
    assert lin == []
    for r in rays:
        assert cone.contains(r)


def test_cone_dimension_cap():
    with pytest.raises(DimensionCapError):
        cone_extreme_rays(ConeHRep(((1,) * 9,), ()))


@st.composite
def cones(draw):
    n = draw(st.integers(2, 4))
    eqs = draw(st.lists(vec(n, st.integers(-2, 2)), max_size=1))
    ineqs = draw(st.lists(vec(n, st.integers(-2, 2)), max_size=4))
    return n, ConeHRep(tuple(eqs), tuple(ineqs))


@given(cones(), st.lists(st.integers(0, 4), min_size=8, max_size=8), st.lists(small, min_size=4, max_size=4))
def test_cone_roundtrip(nc, weights, lweights):
    n, cone = nc
    lin, rays = cone_extreme_rays(cone, n)
    for v in lin:
        assert cone.contains(v) and cone.contains(tuple(-a for a in v))
    for r in rays:
        assert cone.contains(r)
    x = [Fraction(0)] * n
    for w, r in zip(weights, rays):
        x = [a + w * b for a, b in zip(x, r)]
    for w, v in zip(lweights, lin):
        x = [a + w * b for a, b in zip(x, v)]
    assert cone.contains(x)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(vec(n), min_size=1, max_size=5))))
def test_strict_lp_sound(nrows):
    n, rows = nrows
    res = strict_lp_feasible(rows, n)
    if res.feasible:
        assert all(dot(r, res.witness) > 0 for r in rows)


def test_strict_lp_infeasible_pair():
    assert not strict_lp_feasible([(1, 0), (-1, 0)], 2).feasible


def test_fm_solve_mixed():
    cons = [Constraint((1, 1), -2, "="), Constraint((1, -1), 0, ">"), Constraint((0, 1), 0, ">=")]
    res = fm_solve(cons, 2)
    x, y = res.witness
    assert res.feasible and x + y == 2 and x > y >= 0


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_quadratic_roots_are_roots(c2, c1, c0):
    roots = quadratic_roots(c2, c1, c0)
    if roots is None:
        assert c2 == c1 == c0 == 0
        return
    assert roots == sorted(roots)
    for r in roots:
        val = c2 * r * r + c1 * r + c0
        assert sign(val) == 0


def test_surd_ordering_and_collapse():
    s = Surd.make(0, 1, 2)
    assert Fraction(141, 100) < s < Fraction(142, 100)
    assert Surd.make(1, 1, 4) == 3
    assert sign(Surd.make(1, -1, 2)) == -1
    assert Surd.make(0, 1, 3) > s


def test_fm_solve_detects_infeasible():
    cons = [Constraint((1, 1), 2, "="), Constraint((1, -1), 0, ">"), Constraint((0, 1), 0, ">=")]
    assert not fm_solve(cons, 2).feasible
