from __future__ import annotations

import random
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path

import pytest

from greenseq.exactmath import dot
from greenseq.quivercore import cyclic_a3, linear_a
from greenseq.repmod import direct_sum, enumerate_indecomposables
from greenseq.walls import (
    RenderError,
    RenderSpec,
    in_D,
    in_D_sum,
    in_H,
    in_int_D,
    render_svg,
    wall_of,
    wall_shapes,
    wide_category,
)

GOLDEN = Path(__file__).parent / "golden"


def _walls(k):
    return [wall_of(m) for m in enumerate_indecomposables(cyclic_a3(k))]


def test_membership_basics(lam1_pool):
    w = wall_of(lam1_pool.by_name("1>2"))
    assert w.cone.equalities == ((1, 1, 0),) and w.cone.inequalities == ((0, 1, 0),)
    assert in_D((1, -1, 0), w) and in_int_D((1, -1, 0), w)
    assert not in_D((-1, 1, 0), w)
    assert in_D((0, 0, 0), w) and not in_int_D((0, 0, 0), w)
    assert in_H((1, -1, 5), (1, 1, 0))
    with pytest.raises(ValueError):
        in_D((1, 1), w)


def test_simple_interior_is_whole_hyperplane(lam1_pool):
    w = wall_of(lam1_pool.by_name("S1"))
    assert w.proper == ()
    assert in_int_D((0, 3, -7), w)


def test_wide_category(lam1_pool):
    # x.e3 = 0 as well, so the simple S3 shares the point with 1>2
    assert wide_category((1, -1, 0), lam1_pool) == ["S3", "1>2"]
    assert wide_category((0, 0, 0), lam1_pool) == [m.name for m in lam1_pool]
    assert wide_category((1, 1, 1), lam1_pool) == []


def test_summand_law(lam1_pool):
    rng = random.Random(3)
    for _ in range(200):
        A, B = rng.choice(lam1_pool), rng.choice(lam1_pool)
        x = tuple(rng.randint(-2, 2) for _ in range(3))
        assert in_D(x, wall_of(direct_sum(A, B))) == in_D_sum(x, [wall_of(A), wall_of(B)])


def test_figure_shapes():
    s1 = wall_shapes(_walls(1))
    assert sorted(k for _, k in s1) == ["arc"] * 3 + ["circle"] * 3
    s3 = dict(wall_shapes(_walls(3)))
    dots = [k for k, kind in s3.items() if kind == "dot"]
    assert len(dots) == 3


def test_lambda3_rays():
    pool = enumerate_indecomposables(cyclic_a3(3))
    rays = set()
    for M in pool:
        if M.dims in ((2, 1, 1), (1, 2, 1), (1, 1, 2)):
            lin, r = wall_of(M).extreme_rays()
            assert lin == [] and len(r) == 1
            rays.add(r[0])
    assert rays == {(0, 1, -1), (-1, 0, 1), (1, -1, 0)}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_golden_svg(k):
    svg = render_svg(_walls(k))
    assert svg == (GOLDEN / f"lambda{k}.svg").read_text()
    ET.fromstring(svg.encode())


def test_render_deterministic():
    assert render_svg(_walls(2)) == render_svg(_walls(2))
    assert 'viewBox="0 0 800 800"' in render_svg(_walls(1), RenderSpec())


def test_render_needs_three_vertices():
    with pytest.raises(RenderError):
        render_svg([wall_of(m) for m in enumerate_indecomposables(linear_a(2))])


def test_lambda2_covering():
    pool = enumerate_indecomposables(cyclic_a3(2))
    ws = [wall_of(M) for M in pool if M.dims == (1, 1, 1)]
    assert len(ws) == 3
    rng = random.Random(2024)
    for _ in range(200):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        x = (a, b, -a - b)
        assert dot(x, (1, 1, 1)) == 0
        assert any(in_D(x, w) for w in ws)
