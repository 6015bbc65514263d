from __future__ import annotations

import json

import pytest

from greenseq.equivalence import (
    PASS,
    SKIPPED,
    check_mgs_vs_fho,
    check_l_formula,
    check_band_wall,
    check_virtual_stability,
    module_pool,
    verify,
)
from greenseq.quivercore import affine_a, b2, cyclic_a3, kronecker, linear_a


@pytest.mark.parametrize("q", [linear_a(1), linear_a(2), linear_a(3), kronecker(), affine_a(2, 1), b2()])
def test_verify_passes(q):
    report = verify(q, cap=10)
    assert report.passed, report.to_json()
    json.loads(report.to_json())


def test_non_hereditary_report():
    report = verify(cyclic_a3(1))
    assert report.section("band_wall").status == SKIPPED
    assert report.section("mutation").status == SKIPPED


def test_records_shape():
    report = verify(linear_a(2))
    assert len(report.records) == 2
    for rec in report.records:
        assert set(rec) >= {"c_vectors", "fho_check", "hn_check", "path_check", "linearity_verdict"}
        assert rec["fho_check"] == rec["hn_check"] == rec["path_check"] == PASS


def test_mgs_vs_fho_a4():
    s = check_mgs_vs_fho(linear_a(4), 12)
    assert s.status == PASS and s.details["mgs_count"] == s.details["maximal_fho_count"] == 98


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1)])
def test_l_formula(a, b):
    assert check_l_formula(a, b).status == PASS


def test_band_wall_vacuous_in_finite_type():
    from greenseq.equivalence import VACUOUS

    assert check_band_wall(linear_a(3)).status == VACUOUS


def test_band_wall_kronecker():
    s = check_band_wall(kronecker())
    assert s.status == PASS and s.details["ray"] == [[1, -1]]


def test_virtual_stability_sections():
    assert check_virtual_stability(linear_a(3)).status == PASS
    assert check_virtual_stability(b2()).details["mode"] == "pairing-level"


def test_affine_pool_is_capped():
    pool = module_pool(kronecker(), 8)
    assert pool.partial and any(m.name.startswith("R") for m in pool)
