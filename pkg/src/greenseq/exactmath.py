"""
Exact rational scalars, vectors and small polyhedral primitives.

Everything here works over :class:`fractions.Fraction`; nothing in the core
logic touches floating point.  Vectors are plain tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Rat = Fraction
IntVec = tuple
RatVec = tuple

MAX_DIM = 8


class DimensionCapError(ValueError):
    """Raised when an ambient dimension exceeds the desk-scale cap."""


def rat(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact code paths")
    return Fraction(x)


def ratvec(xs: Iterable) -> tuple:
    return tuple(rat(x) for x in xs)


def dot(x: Sequence, d: Sequence):
    """Exact inner product of two equal-length vectors."""
    if len(x) != len(d):
        raise ValueError(f"length mismatch: {len(x)} vs {len(d)}")
    total = Fraction(0)
    for a, b in zip(x, d):
        if a and b:
            total = total + a * b
    return total


def vadd(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def primitive(v: Sequence) -> tuple:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    v = ratvec(v)
    den = 1
    for a in v:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


# ---------------------------------------------------------------------------
# linear algebra over Q


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [[rat(a) for a in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of {x : A x = 0}, one vector per free column, in RREF order."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple | None:
    """One solution of A x = b, or None when inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(r) + [bb] for r, bb in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(map(rat, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [r[n:] for r in red]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int | None = None) -> list[list]:
    """Product of matrices given as row lists; ``inner`` disambiguates empty shapes."""
    rows = len(a)
    k = inner if inner is not None else (len(a[0]) if a else len(b))
    cols = len(b[0]) if b else 0
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(cols)] for i in range(rows)]


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def det(a: Sequence[Sequence]) -> Fraction:
    m = [list(map(rat, r)) for r in a]
    n = len(m)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * out


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class ConeHRep:
    """Closed cone {x : x.v = 0 for v in equalities, x.v <= 0 for v in inequalities}."""

    equalities: tuple = ()
    inequalities: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "equalities", tuple(tuple(v) for v in self.equalities))
        object.__setattr__(self, "inequalities", tuple(tuple(v) for v in self.inequalities))

    def contains(self, x: Sequence) -> bool:
        return all(dot(x, v) == 0 for v in self.equalities) and all(
            dot(x, v) <= 0 for v in self.inequalities
        )


def _canonical_line(v: Sequence) -> tuple:
    p = primitive(v)
    for a in p:
        if a != 0:
            return p if a > 0 else tuple(-b for b in p)
    return p


def cone_extreme_rays(cone: ConeHRep, n: int | None = None) -> tuple[list[tuple], list[tuple]]:
    """
    V-representation of a polyhedral cone.

    Returns ``(lineality_basis, rays)`` with the cone equal to the span of the
    lineality basis plus nonnegative combinations of the rays.  Vectors are
    primitive integer tuples; lineality vectors have positive leading entry.

    Extreme rays are found by enumerating active sets of inequalities in the
    pointed part of the cone, which is cheap at the sizes used here.
    """
    rows_all = list(cone.equalities) + list(cone.inequalities)
    if n is None:
        if not rows_all:
            raise ValueError("ambient dimension unknown for an empty cone description")
        n = len(rows_all[0])
    if n > MAX_DIM:
        raise DimensionCapError(f"ambient dimension {n} exceeds cap {MAX_DIM}")
    eqs = [ratvec(v) for v in cone.equalities]
    ineqs = [ratvec(v) for v in cone.inequalities]

    lin = nullspace(eqs + ineqs, n) if (eqs or ineqs) else [
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    ]
    lineality = [_canonical_line(v) for v in lin]

    # pointed part lives in ker(eqs) intersected with the orthogonal complement of the lineality space
    base = eqs + [ratvec(v) for v in lineality]
    k = n - rank(base) if base else n
    if k == 0:
        return lineality, []

    def feasible(x):
        return all(dot(x, v) <= 0 for v in ineqs)

    rays: set[tuple] = set()
    for size in range(k - 1, min(k - 1, len(ineqs)) + 1):
        for active in combinations(range(len(ineqs)), size):
            system = base + [ineqs[i] for i in active]
            ns = nullspace(system, n)
            if len(ns) != 1:
                continue
            r = ns[0]
            for cand in (r, tuple(-a for a in r)):
                if feasible(cand) and any(dot(cand, v) != 0 for v in ineqs):
                    rays.add(primitive(cand))
    if k == 1 and not ineqs:
        # cannot happen: with no inequalities everything is lineality
        pass
    return lineality, sorted(rays, reverse=True)


# ---------------------------------------------------------------------------
# exact linear feasibility by Fourier-Motzkin elimination

GT, GE, EQ = ">", ">=", "="


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x + const  (op)  0`` with op in {">", ">=", "="}."""

    coeffs: tuple
    const: Fraction = Fraction(0)
    op: str = GT


@dataclass
class LPResult:
    feasible: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.feasible


def _normalize(c: Constraint) -> Constraint:
    scale = max((abs(a) for a in c.coeffs), default=Fraction(0))
    if scale == 0:
        scale = abs(c.const) or Fraction(1)
    return Constraint(tuple(a / scale for a in c.coeffs), c.const / scale, c.op)


def _pick(lower, upper):
    """Pick a value in the interval described by (value, strict) bounds, preferring small integers."""
    lo = max(lower, key=lambda b: (b[0], b[1]), default=None)
    hi = min(upper, key=lambda b: (b[0], not b[1]), default=None)

    def ok(v):
        if lo is not None and (v < lo[0] or (lo[1] and v == lo[0])):
            return False
        if hi is not None and (v > hi[0] or (hi[1] and v == hi[0])):
            return False
        return True

    if ok(Fraction(0)):
        return Fraction(0)
    if lo is not None and hi is not None:
        for cand in (math.floor(lo[0]) + 1, math.ceil(hi[0]) - 1, math.ceil(lo[0]), math.floor(hi[0])):
            if ok(Fraction(cand)):
                return Fraction(cand)
        return (lo[0] + hi[0]) / 2
    if lo is not None:
        return Fraction(math.floor(lo[0]) + 1)
    return Fraction(math.ceil(hi[0]) - 1)


def fm_solve(constraints: Sequence[Constraint], n: int) -> LPResult:
    """
    Decide a mixed strict / non-strict / equality linear system exactly.

    Equalities are eliminated by substitution, the rest by Fourier-Motzkin;
    a witness is rebuilt by back substitution.
    """
    if n > MAX_DIM:
        raise DimensionCapError(f"{n} variables exceeds cap {MAX_DIM}")
    cons = [Constraint(ratvec(c.coeffs), rat(c.const), c.op) for c in constraints]
    for c in cons:
        if len(c.coeffs) != n:
            raise ValueError("constraint length mismatch")

    # stages record, per eliminated variable, how to recover it
    stages: list[tuple] = []
    remaining = list(range(n))
    system = cons
    while True:
        eq = next((c for c in system if c.op == EQ and any(c.coeffs)), None)
        if eq is None:
            break
        j = max(range(n), key=lambda i: (eq.coeffs[i] != 0, -i))
        piv = eq.coeffs[j]
        # x_j = -(const + sum_{i != j} a_i x_i) / piv
        expr = (tuple(Fraction(0) if i == j else -a / piv for i, a in enumerate(eq.coeffs)), -eq.const / piv)
        stages.append(("sub", j, expr))
        new = []
        for c in system:
            if c is eq:
                continue
            a = c.coeffs[j]
            if a == 0:
                new.append(c)
                continue
            coeffs = tuple(
                Fraction(0) if i == j else ci + a * expr[0][i] for i, ci in enumerate(c.coeffs)
            )
            new.append(Constraint(coeffs, c.const + a * expr[1], c.op))
        system = new
        remaining.remove(j)

    for c in system:
        if not any(c.coeffs):
            if (c.op == EQ and c.const != 0) or (c.op == GE and c.const < 0) or (c.op == GT and c.const <= 0):
                return LPResult(False)
    system = [_normalize(c) for c in system if any(c.coeffs)]

    for j in reversed(remaining):
        pos = [c for c in system if c.coeffs[j] > 0]
        neg = [c for c in system if c.coeffs[j] < 0]
        rest = [c for c in system if c.coeffs[j] == 0]
        stages.append(("fm", j, pos, neg))
        new = list(rest)
        seen = set()
        for p in pos:
            for q in neg:
                ap, aq = p.coeffs[j], -q.coeffs[j]
                coeffs = tuple(aq * x + ap * y for x, y in zip(p.coeffs, q.coeffs))
                const = aq * p.const + ap * q.const
                op = GT if GT in (p.op, q.op) else GE
                if not any(coeffs):
                    if (op == GT and const <= 0) or (op == GE and const < 0):
                        return LPResult(False)
                    continue
                c = _normalize(Constraint(coeffs, const, op))
                key = (c.coeffs, c.const, c.op)
                if key in seen:
                    continue
                seen.add(key)
                new.append(c)
        system = new

    x = [Fraction(0)] * n
    for stage in reversed(stages):
        if stage[0] == "sub":
            _, j, (coeffs, const) = stage
            x[j] = const + sum((a * xi for a, xi in zip(coeffs, x)), Fraction(0))
            continue
        _, j, pos, neg = stage
        lower, upper = [], []
        for c in pos:
            rest = c.const + sum((a * xi for i, (a, xi) in enumerate(zip(c.coeffs, x)) if i != j), Fraction(0))
            lower.append((-rest / c.coeffs[j], c.op == GT))
        for c in neg:
            rest = c.const + sum((a * xi for i, (a, xi) in enumerate(zip(c.coeffs, x)) if i != j), Fraction(0))
            upper.append((-rest / c.coeffs[j], c.op == GT))
        x[j] = _pick(lower, upper)

    witness = tuple(x)
    for c in cons:
        v = dot(c.coeffs, witness) + c.const
        good = v == 0 if c.op == EQ else (v >= 0 if c.op == GE else v > 0)
        if not good:
            raise AssertionError(f"Fourier-Motzkin witness fails {c}")
    return LPResult(True, witness)


def strict_lp_feasible(rows: Sequence[Sequence], n: int | None = None) -> LPResult:
    """
    Decide the homogeneous strict system ``c . a > 0`` for every row ``c``.

    On success the witness satisfies every inequality exactly.
    """
    rows = [ratvec(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("n required for an empty system")
        n = len(rows[0])
    if n > MAX_DIM:
        raise DimensionCapError(f"{n} variables exceeds cap {MAX_DIM}")
    if not rows:
        return LPResult(True, tuple(Fraction(0) for _ in range(n)))
    return fm_solve([Constraint(r, Fraction(0), GT) for r in rows], n)


# ---------------------------------------------------------------------------
# quadratic irrationals


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    a, b = q.numerator, q.denominator
    return math.isqrt(a) ** 2 == a and math.isqrt(b) ** 2 == b


def _sqrt_exact(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_sum(a: Fraction, b: Fraction, r: Fraction) -> int:
    """Sign of a + b*sqrt(r) with r > 0."""
    sa, sb = _sign(a), _sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 r
    return sa * _sign(a * a - b * b * r)


def _sign_three(a: Fraction, b: Fraction, r1: Fraction, c: Fraction, r2: Fraction) -> int:
    """Sign of a + b*sqrt(r1) + c*sqrt(r2)."""
    su = _sign_sum_two(b, r1, c, r2)
    sa = _sign(a)
    if su == 0:
        return sa
    if sa == 0 or sa == su:
        return su
    # compare a^2 with (b sqrt r1 + c sqrt r2)^2 = b^2 r1 + c^2 r2 + 2bc sqrt(r1 r2)
    s = _sign_sum(a * a - b * b * r1 - c * c * r2, -2 * b * c, r1 * r2)
    return sa * s


def _sign_sum_two(b: Fraction, r1: Fraction, c: Fraction, r2: Fraction) -> int:
    """Sign of b*sqrt(r1) + c*sqrt(r2)."""
    sb, sc = _sign(b), _sign(c)
    if sb == 0:
        return sc
    if sc == 0 or sb == sc:
        return sb
    return sb * _sign(b * b * r1 - c * c * r2)


class Surd:
    """
    Exact real number ``p + q*sqrt(r)`` with rational p, q and non-square r > 0.

    Arithmetic is closed for operands sharing the same radicand (all values
    derived from one quadratic root do).  Ordering works across radicands.
    """

    __slots__ = ("p", "q", "r")

    def __init__(self, p, q, r):
        self.p, self.q, self.r = rat(p), rat(q), rat(r)

    @staticmethod
    def make(p, q, r):
        p, q, r = rat(p), rat(q), rat(r)
        if q == 0 or r == 0:
            return p
        if r < 0:
            raise ValueError("negative radicand")
        if _is_square(r):
            return p + q * _sqrt_exact(r)
        return Surd(p, q, r)

    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.r != self.r:
                raise ValueError("surds with different radicands cannot be combined")
            return other.p, other.q
        if isinstance(other, (int, Fraction)):
            return rat(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return Surd.make(self.p + c[0], self.q + c[1], self.r)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.p, -self.q, self.r)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return Surd.make(self.p - c[0], self.q - c[1], self.r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        p2, q2 = c
        return Surd.make(self.p * p2 + self.q * q2 * self.r, self.p * q2 + self.q * p2, self.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        p2, q2 = c
        den = p2 * p2 - q2 * q2 * self.r
        if den == 0:
            raise ZeroDivisionError("division by zero surd")
        return self * Surd.make(p2 / den, -q2 / den, self.r)

    def __rtruediv__(self, other):
        den = self.p * self.p - self.q * self.q * self.r
        return Surd.make(self.p / den, -self.q / den, self.r) * other

    def sign(self) -> int:
        return _sign_sum(self.p, self.q, self.r)

    def _cmp(self, other) -> int:
        if isinstance(other, Surd):
            if other.r == self.r:
                return _sign_sum(self.p - other.p, self.q - other.q, self.r)
            return _sign_three(self.p - other.p, self.q, self.r, -other.q, other.r)
        if isinstance(other, (int, Fraction)):
            return _sign_sum(self.p - other, self.q, self.r)
        return NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __eq__(self, other):
        c = self._cmp(other)
        return False if c is NotImplemented else c == 0

    def __hash__(self):
        return hash((self.p, self.q, self.r))

    def __bool__(self):
        return True

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.r)

    def __repr__(self):
        return f"Surd({self.p} + {self.q}*sqrt({self.r}))"

    def __str__(self):
        return f"{self.p}{'+' if self.q > 0 else '-'}{abs(self.q)}*sqrt({self.r})"


def sign(x) -> int:
    if isinstance(x, Surd):
        return x.sign()
    return _sign(x)


def quadratic_roots(c2, c1, c0) -> list:
    """
    Real roots of ``c2 t^2 + c1 t + c0`` in increasing order.

    Returns ``None`` for the zero polynomial.  Irrational roots are :class:`Surd`.
    """
    c2, c1, c0 = rat(c2), rat(c1), rat(c0)
    if c2 == 0:
        if c1 == 0:
            return None if c0 == 0 else []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    centre = -c1 / (2 * c2)
    if disc == 0:
        return [centre]
    half = 1 / (2 * abs(c2))
    return [Surd.make(centre, -half, disc), Surd.make(centre, half, disc)]
