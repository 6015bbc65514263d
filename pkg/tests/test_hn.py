from __future__ import annotations

import random
from fractions import Fraction

import pytest
from greenseq.hn import (
    Extendable,
    HNError,
    HNSystem,
    Maximal,
    hn_filtration,
    hn_type,
    is_maximal_fho,
    is_weak_fho,
    t0,
    t1,
    torsion_pair,
)
from greenseq.equivalence import maximal_fho_sequences
from greenseq.paths import NonlinearZ
from greenseq.repmod import direct_sum, direct_sums_up_to, hom_dim


@pytest.fixture(scope="module")
def a2m(a2_pool):
    return {k: a2_pool.by_name(k) for k in ("S1", "S2", "1>2")}


def test_weak_fho(a2m):
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    assert is_weak_fho([S1, P1, S2])
    assert not is_weak_fho([P1, S1])
    assert is_weak_fho([P1])


def test_maximality(a2m, a2_pool):
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    assert isinstance(is_maximal_fho([S1, P1, S2], a2_pool), Maximal)
    assert isinstance(is_maximal_fho([S2, S1], a2_pool), Maximal)
    assert is_maximal_fho([S1, S2], a2_pool) == Extendable(1, "1>2")
    with pytest.raises(HNError):
        is_maximal_fho([P1, S1], a2_pool)


def test_filtration_examples(a2m):
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    sys_ = HNSystem([S1, P1, S2])
    f = hn_filtration(direct_sum(S1, S2), sys_)
    assert f.factor_labels == [(1, 1), (3, 1)] and f.factor_dims == [(1, 0), (0, 1)]
    assert hn_filtration(P1, sys_).factor_labels == [(2, 1)]
    f = hn_filtration(direct_sum(P1, S1), sys_)
    assert f.factor_labels == [(1, 1), (2, 1)]
    assert [tuple(len(b) for b in sub) for sub in f.chain] == [(0, 0), (1, 0), (2, 1)]


def test_non_maximal_system_raises(a2m):
    # (S1, S2) is not maximal: the first map S1 -> P1 is zero, S2 -> P1 is mono but P1/S2 = S1 comes later
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    with pytest.raises(HNError):
        hn_filtration(P1, HNSystem([S1, S2]))


def test_system_validation(a2m):
    with pytest.raises(HNError):
        HNSystem([a2m["1>2"], a2m["S1"]])


@pytest.mark.parametrize("pool_name", ["a2_pool", "a3_pool"])
def test_uniqueness_under_random_homs(pool_name, request):
    pool = request.getfixturevalue(pool_name)
    rng = random.Random(11)
    for seq in maximal_fho_sequences(pool):
        sys_ = HNSystem([pool[i] for i in seq])
        for combo in direct_sums_up_to(pool, 4):
            X = direct_sum(*[pool[i] for i in combo])
            base = hn_filtration(X, sys_).factor_labels
            for _ in range(2):
                assert hn_filtration(X, sys_, rng).factor_labels == base


def test_t0_t1_examples(a2m):
    z = NonlinearZ.linear((0, 1), (1, 1))
    assert t0(z, (1, 0)) == 0
    assert t0(z, (1, 1)) == Fraction(1, 2)
    assert t0(z, (0, 1)) == 1
    assert t1(z, a2m["1>2"]) == Fraction(1, 2)


def test_hn_type_examples(a2m):
    z = NonlinearZ.linear((0, 1), (1, 1))
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    assert hn_type(direct_sum(S1, S2), z).strata == ((0, (1, 0)), (1, (0, 1)))
    assert hn_type(P1, z).strata == ((Fraction(1, 2), (1, 1)),)
    assert hn_type(S1, z).strata == ((0, (1, 0)),)


def test_hn_type_dims_sum(a3_pool):
    z = NonlinearZ.linear((0, 1, 2), (1, 1, 1))
    for combo in direct_sums_up_to(a3_pool, 4):
        X = direct_sum(*[a3_pool[i] for i in combo])
        ht = hn_type(X, z)
        assert tuple(map(sum, zip(*ht.dims))) == X.dims
        assert ht.times == sorted(set(ht.times))


def test_torsion_pairs(a2m, a2_pool):
    S1, S2, P1 = a2m["S1"], a2m["S2"], a2m["1>2"]
    sys_ = HNSystem([S1, P1, S2])
    T, F = torsion_pair(sys_, 1, a2_pool)
    assert [m.name for m in T] == ["S1"] and sorted(m.name for m in F) == ["1>2", "S2"]
    T, F = torsion_pair(sys_, 0, a2_pool)
    assert T == [] and len(F) == 3
    T, F = torsion_pair(sys_, 3, a2_pool)
    assert len(T) == 3 and F == []


def test_hom_vanishing_across_strata(a3_pool):
    for seq in maximal_fho_sequences(a3_pool):
        mods = [a3_pool[i] for i in seq]
        sys_ = HNSystem(mods)
        for combo in direct_sums_up_to(a3_pool, 3):
            X = direct_sum(*[a3_pool[i] for i in combo])
            labels = [k for k, _ in hn_filtration(X, sys_).factor_labels]
            for i, k in enumerate(labels):
                for j in labels[i + 1:]:
                    assert hom_dim(mods[k - 1], mods[j - 1]) == 0
