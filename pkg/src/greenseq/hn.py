"""
Forward hom-orthogonal sequences, HN filtrations and HN types.

An ordered list of Schurian modules ``M_1, ..., M_m`` is forward
hom-orthogonal when ``Hom(M_i, M_j) = 0`` for ``i < j``.  When it cannot be
lengthened it filters every module: repeatedly take the smallest ``k`` with a
nonzero map ``M_k -> Y`` (which is then injective) and pass to the cokernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import nullspace, rank
from .paths import NonlinearZ, OneSided, mu_fixed_points, slope_derivative
from .repmod import (
    Representation,
    closed_node_sets,
    coordinate_quotient,
    coordinate_submodule,
    hom_basis,
    hom_dim,
    image_and_quotient,
    is_mono,
    is_schurian,
    random_hom,
)


class HNError(ValueError):
    pass


class NonMonoWitness(HNError):
    """A nonzero map from the first available system member was not injective."""

    def __init__(self, k: int, target: str):
        super().__init__(f"map from system member {k} into {target} is not a monomorphism")
        self.k = k


class NoStratum(HNError):
    """A nonzero quotient received no map from any system member."""


class GreennessViolated(HNError):
    def __init__(self, t, dim):
        super().__init__(f"semistable pair at t={t} with dim {dim} is not green")
        self.t = t
        self.dim = dim


def is_weak_fho(seq: Sequence[Representation]) -> bool:
    """``Hom(M_i, M_j) = 0`` for all ``i < j``."""
    return all(hom_dim(seq[i], seq[j]) == 0 for i in range(len(seq)) for j in range(i + 1, len(seq)))


@dataclass(frozen=True)
class Maximal:
    def __bool__(self):
        return True


@dataclass(frozen=True)
class Extendable:
    """Inserting ``module_key`` at slot ``position`` (0-based) keeps the sequence hom-orthogonal."""

    position: int
    module_key: str

    def __bool__(self):
        return False


def is_maximal_fho(seq: Sequence[Representation], pool: Sequence[Representation]) -> Maximal | Extendable:
    """
    Try every pool module at every slot.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> p = enumerate_indecomposables(linear_a(2))
    >>> is_maximal_fho([p.by_name("S1"), p.by_name("S2")], p)
    Extendable(position=1, module_key='1>2')
    """
    if not is_weak_fho(seq):
        raise HNError("sequence is not forward hom-orthogonal")
    for X in pool:
        if not is_schurian(X):
            continue
        for pos in range(len(seq) + 1):
            before, after = seq[:pos], seq[pos:]
            if all(hom_dim(M, X) == 0 for M in before) and all(hom_dim(X, M) == 0 for M in after):
                return Extendable(pos, X.name)
    return Maximal()


@dataclass(frozen=True)
class HNSystem:
    """An ordered, forward hom-orthogonal list of Schurian modules."""

    modules: tuple

    def __post_init__(self):
        object.__setattr__(self, "modules", tuple(self.modules))
        for M in self.modules:
            if not is_schurian(M):
                raise HNError(f"{M.name} is not Schurian")
        if not is_weak_fho(self.modules):
            raise HNError("system is not forward hom-orthogonal")

    @property
    def dims(self) -> list:
        return [M.dims for M in self.modules]

    def __len__(self):
        return len(self.modules)


@dataclass
class HNFiltration:
    """
    ``0 = X_0 ⊂ X_1 ⊂ ... ⊂ X_m = X`` with factors in ``E(M_k)``.

    ``chain[j]`` gives, per vertex, a basis (list of column vectors in the
    coordinates of ``X``) of ``X_j``.  ``factor_labels`` pairs a 1-based
    system index with a multiplicity; ``factor_dims`` are the factor
    dimension vectors.
    """

    chain: list
    factor_labels: list
    factor_dims: list
    steps: list = field(default_factory=list)


def _identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _compose(p, q, rows, inner, cols):
    return tuple(
        tuple(sum((p[i][k] * q[k][j] for k in range(inner)), Fraction(0)) for j in range(cols))
        for i in range(rows)
    )


def hn_filtration(X: Representation, sys: HNSystem, rng: random.Random | None = None) -> HNFiltration:
    """
    Greedy filtration of ``X`` by the system.

    Each step picks the least ``k`` with ``Hom(M_k, Y) != 0`` for the current
    quotient ``Y``, chooses a nonzero map (the first basis vector, or a
    random combination when ``rng`` is given), insists it is injective and
    divides it out.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables, direct_sum
    >>> p = enumerate_indecomposables(linear_a(2))
    >>> S1, S2, P1 = p.by_name("S1"), p.by_name("S2"), p.by_name("1>2")
    >>> hn_filtration(direct_sum(S1, S2), HNSystem([S1, P1, S2])).factor_labels
    [(1, 1), (3, 1)]
    """
    q = X.quiver
    n = q.n
    Y = X
    proj = tuple(_identity(X.dims[v]) for v in range(n))
    steps = []
    chain = [tuple(() for _ in range(n))]
    while Y.total_dim:
        k = next((i for i, M in enumerate(sys.modules) if hom_dim(M, Y) > 0), None)
        if k is None:
            raise NoStratum(f"no system member maps to the quotient with dims {Y.dims}")
        M = sys.modules[k]
        f = random_hom(M, Y, rng)
        if not is_mono(M, f):
            raise NonMonoWitness(k + 1, Y.name or str(Y.dims))
        iq = image_and_quotient(M, Y, f)
        proj = tuple(
            _compose(iq.projection[v], proj[v], iq.quotient.dims[v], Y.dims[v], X.dims[v]) for v in range(n)
        )
        Y = iq.quotient
        steps.append(k + 1)
        kernel = []
        for v in range(n):
            if X.dims[v] == 0:
                kernel.append(())
            elif Y.dims[v] == 0:
                kernel.append(_identity(X.dims[v]))
            else:
                kernel.append(tuple(nullspace(proj[v], X.dims[v])))
        chain.append(tuple(kernel))

    labels, dims = [], []
    for k in steps:
        if labels and labels[-1][0] == k:
            labels[-1] = (k, labels[-1][1] + 1)
        else:
            labels.append((k, 1))
    # merge the chain at stratum boundaries
    merged_chain = [chain[0]]
    pos = 0
    prev_dim = tuple(0 for _ in range(n))
    for k, mult in labels:
        pos += mult
        merged_chain.append(chain[pos])
        cur = tuple(len(b) for b in chain[pos])
        d = tuple(c - p for c, p in zip(cur, prev_dim))
        base = sys.modules[k - 1].dims
        if d != tuple(mult * x for x in base):
            raise AssertionError(f"factor {d} is not {mult} copies of {base}")
        dims.append(d)
        prev_dim = cur
    for a, b in zip(labels, labels[1:]):
        if b[0] <= a[0]:
            raise HNError(f"factor indices do not increase: {labels}")
    return HNFiltration(merged_chain, labels, dims, steps)


# ---------------------------------------------------------------------------
# HN types from a stability function


@dataclass(frozen=True)
class HNType:
    strata: tuple

    @property
    def dims(self) -> list:
        return [d for _, d in self.strata]

    @property
    def times(self) -> list:
        return [t for t, _ in self.strata]


def t0(z: NonlinearZ, d: Sequence[int]):
    """Least ``t`` with ``mu_t(d) = t``."""
    roots = mu_fixed_points(z, tuple(d))
    if not roots:
        raise HNError(f"mu_t({tuple(d)}) = t has no solution")
    return roots[0]


def t1(z: NonlinearZ, M: Representation):
    """Least ``t0`` over the nonzero submodules of ``M``."""
    from .repmod import submodule_dimvecs

    return min(t0(z, d) for d in submodule_dimvecs(M) if any(d))


def _check_green(z: NonlinearZ, t, d):
    der = slope_derivative(z, d, t)
    vals = [der.left, der.right] if isinstance(der, OneSided) else [der]
    if any(v >= 1 for v in vals):
        raise GreennessViolated(t, d)


def hn_type(X: Representation, z: NonlinearZ) -> HNType:
    """
    HN type of ``X`` by the t0/t1 recursion.

    The first stratum is the largest submodule whose ``t0`` equals
    ``t1(X)``; it is realized as the sum of all coordinate submodules that
    attain ``t1``, and the recursion continues on the quotient.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> p = enumerate_indecomposables(linear_a(2))
    >>> hn_type(p.by_name("1>2"), NonlinearZ.linear((0, 1), (1, 1))).strata
    ((Fraction(1, 2), (1, 1)),)
    """
    if not X.has_coordinates:
        raise HNError("hn_type needs a module with a coordinate structure")
    strata = []
    Y = X
    cache: dict = {}

    def t0c(d):
        if d not in cache:
            cache[d] = t0(z, d)
        return cache[d]

    while Y.total_dim:
        sets = [s for s in closed_node_sets(Y) if s]
        dims = {s: _dim_of(Y, s) for s in sets}
        best = min(t0c(d) for d in set(dims.values()))
        attaining = [s for s in sets if t0c(dims[s]) == best]
        union = frozenset().union(*attaining)
        ud = _dim_of(Y, union)
        if t0c(ud) != best:
            raise HNError(f"sum of minimal-t0 submodules does not attain t1 at {ud}")
        for s in attaining:
            if any(a > b for a, b in zip(dims[s], ud)):
                raise HNError("maximal destabilizing submodule is not unique")
        _check_green(z, best, ud)
        if strata and not best > strata[-1][0]:
            raise HNError("HN times do not increase")
        strata.append((best, ud))
        Y = coordinate_quotient(Y, union)
    return HNType(tuple(strata))


def _dim_of(Y: Representation, nodes) -> tuple:
    d = [0] * Y.quiver.n
    for u in nodes:
        d[Y.nodes[u] - 1] += 1
    return tuple(d)


# ---------------------------------------------------------------------------
# torsion pairs


def torsion_pair(sys: HNSystem, cut: int, pool: Sequence[Representation]) -> tuple[list, list]:
    """
    Split the pool at a system index.

    ``T`` holds modules whose factors all have index ``<= cut``; ``F``
    those whose factors all have index ``> cut``.  ``Hom(T, F) = 0`` is asserted.
    """
    T, F = [], []
    for X in pool:
        idx = [k for k, _ in hn_filtration(X, sys).factor_labels]
        if all(k <= cut for k in idx):
            T.append(X)
        elif all(k > cut for k in idx):
            F.append(X)
    for A in T:
        for B in F:
            if hom_dim(A, B):
                raise AssertionError(f"Hom({A.name}, {B.name}) != 0 across the torsion pair")
    return T, F
