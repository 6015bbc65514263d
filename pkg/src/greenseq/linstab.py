"""
Linear central charges ``Z(x) = a . x + i b . x`` and the linearity question.

Given a forward hom-orthogonal sequence, :func:`linearity_decide` looks for
``a`` (with ``b`` fixed) whose stable modules are exactly the sequence, in
order of increasing slope.  Positive answers come with a verified witness;
negative answers for one ``b`` are reported as ``Unknown``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import dot, ratvec, strict_lp_feasible
from .hn import is_weak_fho
from .paths import PLPath
from .repmod import Representation, is_schurian, submodule_dimvecs


@dataclass(frozen=True)
class CentralCharge:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", ratvec(self.a))
        object.__setattr__(self, "b", ratvec(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")
        if any(x <= 0 for x in self.b):
            raise ValueError("b must be coordinatewise positive")

    def path(self) -> PLPath:
        """``gamma_Z(t) = t b - a`` as a linearly extended path."""
        return PLPath([0, 1], [tuple(-x for x in self.a), tuple(y - x for x, y in zip(self.a, self.b))])

    def to_dict(self) -> dict:
        return {"a": [str(x) for x in self.a], "b": [str(x) for x in self.b]}


def slope(zc: CentralCharge, d: Sequence[int]) -> Fraction:
    """
    ``(a . d) / (b . d)``.

    Examples
    --------
    >>> slope(CentralCharge((0, 1), (1, 1)), (1, 1))
    Fraction(1, 2)
    """
    if not any(d):
        raise ValueError("zero dimension vector")
    return dot(zc.a, d) / dot(zc.b, d)


def _proper_subs(M: Representation) -> list:
    return submodule_dimvecs(M).proper_nonzero(M.dims)


def is_semistable(zc: CentralCharge, M: Representation) -> bool:
    mu = slope(zc, M.dims)
    return all(slope(zc, d) >= mu for d in _proper_subs(M))


def is_stable(zc: CentralCharge, M: Representation) -> bool:
    mu = slope(zc, M.dims)
    return all(slope(zc, d) > mu for d in _proper_subs(M))


@dataclass
class StableSet:
    """Semistable pool members sorted by slope."""

    entries: list
    stable: dict
    equal_slopes: bool

    @property
    def keys(self) -> list:
        return [k for k, _ in self.entries]


def stable_set(zc: CentralCharge, pool: Sequence[Representation]) -> StableSet:
    """
    All semistable pool members with their slopes, in increasing slope order.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> stable_set(CentralCharge((1, 0), (1, 1)), enumerate_indecomposables(linear_a(2))).entries
    [('S2', Fraction(0, 1)), ('S1', Fraction(1, 1))]
    """
    rows = []
    stable = {}
    for M in pool:
        if is_semistable(zc, M):
            rows.append((M.name, slope(zc, M.dims)))
            stable[M.name] = is_stable(zc, M)
    rows.sort(key=lambda r: r[1])
    slopes = [s for _, s in rows]
    return StableSet(rows, stable, len(set(slopes)) != len(slopes))


@dataclass
class LinearityVerdict:
    """``status`` is ``"Linear"``, ``"NotRealized"`` or ``"Unknown"``."""

    status: str
    witness: CentralCharge | None = None
    counterexample: str | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"status": self.status, "notes": list(self.notes)}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def linearity_rows(seq: Sequence[Representation], b: Sequence) -> list[tuple]:
    """Rows ``r`` of the strict system ``r . a > 0`` expressing stability and slope order."""
    b = ratvec(b)
    rows = []
    for M in seq:
        d = M.dims
        bd = dot(b, d)
        for e in _proper_subs(M):
            be = dot(b, e)
            # mu(e) > mu(d)  <=>  (b.d)(a.e) - (b.e)(a.d) > 0
            rows.append(tuple(bd * x - be * y for x, y in zip(e, d)))
    for M, N in zip(seq, seq[1:]):
        d, e = M.dims, N.dims
        bd, be = dot(b, d), dot(b, e)
        # mu(d) < mu(e)  <=>  (b.d)(a.e) - (b.e)(a.d) > 0
        rows.append(tuple(bd * x - be * y for x, y in zip(e, d)))
    return rows


def linearity_decide(seq: Sequence[Representation], b: Sequence, pool: Sequence[Representation]) -> LinearityVerdict:
    """
    Decide whether some ``a`` makes ``seq`` the stable set of ``(a, b)``.

    ``NotRealized`` is returned only for sequences no linear charge can
    realize (a member is not Schurian, or the sequence is not forward
    hom-orthogonal).  An infeasible system for this ``b`` gives ``Unknown``.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> p = enumerate_indecomposables(linear_a(2))
    >>> v = linearity_decide([p.by_name("S1"), p.by_name("S2")], (1, 1), p)
    >>> v.status, v.counterexample
    ('Unknown', '1>2')
    """
    b = ratvec(b)
    for M in seq:
        if not is_schurian(M):
            return LinearityVerdict("NotRealized", counterexample=M.name, notes=["stable modules are Schurian"])
    if not is_weak_fho(seq):
        return LinearityVerdict("NotRealized", notes=["sequence is not forward hom-orthogonal"])
    n = len(b)
    rows = linearity_rows(seq, b)
    res = strict_lp_feasible(rows, n)
    if not res.feasible:
        # some member cannot be stable, or the order cannot be realized, for this b
        return LinearityVerdict("Unknown", notes=[f"no a works for b={[str(x) for x in b]}"])
    zc = CentralCharge(res.witness, b)
    ss = stable_set(zc, pool)
    want = [M.name for M in seq]
    extras = [k for k in ss.keys if k not in want]
    if extras:
        return LinearityVerdict("Unknown", zc, extras[0], notes=["witness makes an extra module semistable"])
    if ss.keys != want or not all(ss.stable[k] for k in want) or ss.equal_slopes:
        return LinearityVerdict("Unknown", zc, notes=["witness failed verification"])
    return LinearityVerdict("Linear", zc)


def classical_b(q) -> tuple:
    """The classical choice ``b = f`` (the valuations)."""
    return tuple(Fraction(v) for v in q.valuations)


def linearity_sweep(seq: Sequence[Representation], pool: Sequence[Representation],
                    extra_bs: Sequence[Sequence] = ()) -> LinearityVerdict:
    """Try the classical ``b``, then all ones, then ``extra_bs``; first Linear verdict wins."""
    q = seq[0].quiver if seq else pool[0].quiver
    tried = []
    candidates = [classical_b(q), tuple(Fraction(1) for _ in range(q.n))] + [ratvec(b) for b in extra_bs]
    last = None
    for b in candidates:
        if b in tried:
            continue
        tried.append(b)
        v = linearity_decide(seq, b, pool)
        if v.status != "Unknown":
            return v
        last = v
    last.notes.append(f"tried {len(tried)} choices of b")
    return last
