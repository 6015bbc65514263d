"""
Piecewise-linear paths, wall crossings and nonlinear stability functions.

A path meets the wall ``D(M)`` at time ``t`` when ``gamma(t)`` lies in
``D(M)``.  The crossing is green when ``gamma'(t) . dim M > 0`` and red when
it is negative.  A nonlinear stability function ``Z_t(x) = a_t . x + i b_t . x``
gives the path ``gamma_Z(t) = t b_t - a_t``; its crossings are the pairs
``(M, t)`` with ``mu_t(M) = t`` and ``M`` semistable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import Surd, dot, quadratic_roots, rat, ratvec, sign
from .mutation import MGS, seeds_along
from .quivercore import Quiver
from .repmod import enumerate_indecomposables, exceptional_pool
from .walls import Wall, in_D, wall_of

GREEN = "green"
RED = "red"


class DegeneratePath(ValueError):
    """A wall is met tangentially or exactly at a breakpoint."""


class SimultaneousCrossings(ValueError):
    """Two walls are crossed at the same time."""

    def __init__(self, t, modules):
        super().__init__(f"walls {modules} are crossed simultaneously at t={t}")
        self.t = t
        self.modules = modules


class VerificationFailed(RuntimeError):
    pass


class TailError(ValueError):
    pass


def _vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vscale(c, x):
    return tuple(c * a for a in x)


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class Piece:
    """``gamma(t) = c0 + c1 t`` for ``lo <= t <= hi`` (``None`` means unbounded)."""

    lo: Fraction | None
    hi: Fraction | None
    c0: tuple
    c1: tuple

    def contains(self, t) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def at(self, t) -> tuple:
        return tuple(a + b * t for a, b in zip(self.c0, self.c1))


class PLPath:
    """
    Piecewise-linear path through ``(time, point)`` breakpoints.

    Parameters
    ----------
    times : sequence of rationals
        Strictly increasing.
    points : sequence of vectors
    extend : {"linear", "constant"}
        Behaviour outside ``[times[0], times[-1]]``: continue with the end
        segments' velocities, or stay put.
    """

    def __init__(self, times: Sequence, points: Sequence[Sequence], extend: str = "linear"):
        self.times = tuple(rat(t) for t in times)
        self.points = tuple(ratvec(p) for p in points)
        self.extend = extend
        if not self.times or len(self.times) != len(self.points):
            raise ValueError("need matching, nonempty times and points")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        if len({len(p) for p in self.points}) != 1:
            raise ValueError("points must share one length")
        if extend not in ("linear", "constant"):
            raise ValueError("extend must be 'linear' or 'constant'")
        if extend == "linear" and len(self.times) < 2:
            raise ValueError("linear extension needs at least two breakpoints")

    @property
    def n(self) -> int:
        return len(self.points[0])

    def __repr__(self):
        return f"PLPath({len(self.times)} breakpoints, extend={self.extend!r})"

    def pieces(self) -> list[Piece]:
        ts, ps = self.times, self.points
        inner = []
        for i in range(len(ts) - 1):
            v = tuple((b - a) / (ts[i + 1] - ts[i]) for a, b in zip(ps[i], ps[i + 1]))
            c0 = tuple(p - x * ts[i] for p, x in zip(ps[i], v))
            inner.append(Piece(ts[i], ts[i + 1], c0, v))
        zero = tuple(Fraction(0) for _ in range(self.n))
        if self.extend == "linear":
            head = Piece(None, ts[0], inner[0].c0, inner[0].c1)
            tail = Piece(ts[-1], None, inner[-1].c0, inner[-1].c1)
        else:
            head = Piece(None, ts[0], ps[0], zero)
            tail = Piece(ts[-1], None, ps[-1], zero)
        return [head] + inner + [tail]

    def __call__(self, t) -> tuple:
        t = rat(t) if not isinstance(t, Surd) else t
        for p in self.pieces():
            if p.contains(t):
                return p.at(t)
        raise AssertionError("unreachable")

    def velocity(self, t, side: str = "right") -> tuple:
        """One-sided velocity at ``t``."""
        for p in self.pieces():
            inside = (p.lo is None or t > p.lo or (side == "right" and t == p.lo)) and (
                p.hi is None or t < p.hi or (side == "left" and t == p.hi)
            )
            if inside:
                return p.c1
        raise AssertionError("unreachable")

    def canonical(self) -> "PLPath":
        """Same function with redundant (non-kink) breakpoints removed."""
        pcs = self.pieces()
        keep = []
        for i, t in enumerate(self.times):
            before, after = pcs[i], pcs[i + 1]
            if before.c1 != after.c1:
                keep.append(i)
        if self.extend == "linear" and len(keep) < 2:
            # a straight line: keep the two outermost breakpoints
            keep = [0, len(self.times) - 1]
        if not keep:
            keep = [0]
        return PLPath([self.times[i] for i in keep], [self.points[i] for i in keep], self.extend)

    def same_function(self, other: "PLPath") -> bool:
        a, b = self.canonical(), other.canonical()
        return a.times == b.times and a.points == b.points and (
            a.extend == b.extend or all(p.c1 == q.c1 for p, q in zip(a.pieces()[::len(a.pieces()) - 1],
                                                                         b.pieces()[::len(b.pieces()) - 1]))
        )

    # --- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "breakpoints": [[str(t)] + [str(x) for x in p] for t, p in zip(self.times, self.points)],
            "extend": self.extend,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PLPath":
        rows = data["breakpoints"]
        return cls([Fraction(r[0]) for r in rows], [[Fraction(x) for x in r[1:]] for r in rows],
                   data.get("extend", "linear"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# crossings


@dataclass(frozen=True)
class Crossing:
    time: object
    module_key: str
    dim: tuple
    color: str
    point: tuple

    @property
    def green(self) -> bool:
        return self.color == GREEN


@dataclass(frozen=True)
class _Event:
    kind: str  # "cross", "tangent", "breakpoint"
    time: object
    wall: Wall
    value: object = None


def _segment_events(piece: Piece, w: Wall, breakpoints: set) -> list[_Event]:
    d = w.dim
    slope = dot(piece.c1, d)
    offset = dot(piece.c0, d)
    if slope != 0:
        t = -offset / slope
        if not piece.contains(t):
            return []
        if not in_D(piece.at(t), w):
            return []
        if t in breakpoints:
            return [_Event("breakpoint", t, w)]
        return [_Event("cross", t, w, slope)]
    if offset != 0:
        return []
    # the piece runs inside the hyperplane: does it touch D(M)?
    lo, hi = piece.lo, piece.hi
    lo_strict = hi_strict = False
    for v in w.proper:
        # v . (c0 + c1 t) <= 0
        a0, a1 = dot(piece.c0, v), dot(piece.c1, v)
        if a1 == 0:
            if a0 > 0:
                return []
            continue
        bound = -a0 / a1
        if a1 > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo > hi:
        return []
    t = lo if lo is not None else (hi if hi is not None else Fraction(0))
    return [_Event("tangent", t, w)]


def _events(path: PLPath, walls: Sequence[Wall]) -> list[_Event]:
    bps = set(path.times[1:-1]) if path.extend == "linear" else set(path.times)
    if path.extend == "linear":
        # the first and last breakpoints are kinks only if the velocity changes there
        pcs = path.pieces()
        for i in (0, len(path.times) - 1):
            if pcs[i].c1 != pcs[i + 1].c1:
                bps.add(path.times[i])
    out = []
    seen = set()
    for piece in path.pieces():
        for w in walls:
            for ev in _segment_events(piece, w, bps):
                key = (ev.kind, ev.time, w.module_key)
                if key not in seen:
                    seen.add(key)
                    out.append(ev)
    return out


@dataclass
class ValidationResult:
    valid: bool
    reason: str = ""
    detail: str = ""

    def __bool__(self):
        return self.valid


def _tail_signs(path: PLPath) -> tuple[bool, bool]:
    pcs = path.pieces()
    head, tail = pcs[0], pcs[-1]
    neg = all(v > 0 or (v == 0 and c < 0) for c, v in zip(head.c0, head.c1))
    pos = all(v > 0 or (v == 0 and c > 0) for c, v in zip(tail.c0, tail.c1))
    return neg, pos


def validate_reddening(path: PLPath, walls: Sequence[Wall]) -> ValidationResult:
    """
    Check that ``path`` is a reddening path relative to ``walls``.

    Transversality is checked first (tangential contact, breakpoint
    landings), then the signs of the coordinates at both ends.
    """
    for ev in _events(path, walls):
        if ev.kind == "tangent":
            return ValidationResult(False, "tangent", f"{ev.wall.module_key} at t={ev.time}")
        if ev.kind == "breakpoint":
            return ValidationResult(False, "degenerate", f"{ev.wall.module_key} at breakpoint t={ev.time}")
    neg, pos = _tail_signs(path)
    if not neg or not pos:
        return ValidationResult(False, "endpoint-sign", "start not eventually negative" if not neg else
                                "end not eventually positive")
    return ValidationResult(True)


def crossings(path: PLPath, walls: Sequence[Wall]) -> list[Crossing]:
    """
    Ordered wall crossings of a PL path.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> walls = [wall_of(m) for m in enumerate_indecomposables(linear_a(2))]
    >>> [(c.time, c.dim, c.color) for c in crossings(PLPath([0, 1], [(-1, -2), (2, 1)]), walls)]
    [(Fraction(1, 3), (1, 0), 'green'), (Fraction(1, 2), (1, 1), 'green'), (Fraction(2, 3), (0, 1), 'green')]
    """
    out = []
    for ev in _events(path, walls):
        if ev.kind != "cross":
            raise DegeneratePath(f"{ev.kind} contact with {ev.wall.module_key} at t={ev.time}")
        out.append(Crossing(ev.time, ev.wall.module_key, ev.wall.dim, GREEN if ev.value > 0 else RED,
                            path(ev.time)))
    return _sorted_distinct(out)


def _sorted_distinct(out: list[Crossing]) -> list[Crossing]:
    out.sort(key=lambda c: c.time)
    for a, b in zip(out, out[1:]):
        if a.time == b.time:
            same = [c.module_key for c in out if c.time == a.time]
            raise SimultaneousCrossings(a.time, same)
    return out


# ---------------------------------------------------------------------------
# nonlinear stability functions


@dataclass(frozen=True)
class ZPiece:
    """On ``[lo, hi]``: ``a_t = a0 + a1 t`` and ``b_t = b0 + b1 t``."""

    lo: Fraction | None
    hi: Fraction | None
    a0: tuple
    a1: tuple
    b0: tuple
    b1: tuple

    def contains(self, t) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def interior(self, t) -> bool:
        return (self.lo is None or t > self.lo) and (self.hi is None or t < self.hi)


@dataclass(frozen=True)
class OneSided:
    """Left and right values of a quantity at a breakpoint."""

    left: object
    right: object


def _eval(c0, c1, t):
    return tuple(x + y * t for x, y in zip(c0, c1))


class NonlinearZ:
    """
    ``Z_t(x) = a_t . x + i b_t . x`` with ``a_t``, ``b_t`` piecewise linear.

    Both paths must use constant extension so the charge is constant outside
    a bounded interval, and ``b_t`` must be coordinatewise positive.
    """

    def __init__(self, a_path: PLPath, b_path: PLPath):
        if a_path.extend != "constant" or b_path.extend != "constant":
            raise ValueError("charges must be constant outside a bounded interval")
        if a_path.n != b_path.n:
            raise ValueError("a and b live in different dimensions")
        # b is PL, so positivity at the breakpoints is positivity everywhere
        if any(x <= 0 for p in b_path.points for x in p):
            raise ValueError("b_t must be coordinatewise positive")
        self.a_path = a_path
        self.b_path = b_path
        self._pieces = None

    @classmethod
    def linear(cls, a, b) -> "NonlinearZ":
        return cls(PLPath([0], [a], "constant"), PLPath([0], [b], "constant"))

    @property
    def n(self) -> int:
        return self.a_path.n

    @property
    def breakpoints(self) -> tuple:
        """Times where ``a`` or ``b`` genuinely changes slope."""
        return tuple(p.hi for p in self.pieces()[:-1])

    def pieces(self) -> list[ZPiece]:
        if self._pieces is None:
            raw = sorted(set(self.a_path.times) | set(self.b_path.times))
            bounds = [None] + raw + [None]
            out = []
            for lo, hi in zip(bounds, bounds[1:]):
                probe = _probe(lo, hi)
                pa = _piece_at(self.a_path, probe)
                pb = _piece_at(self.b_path, probe)
                coeffs = (pa.c0, pa.c1, pb.c0, pb.c1)
                if out and (out[-1].a0, out[-1].a1, out[-1].b0, out[-1].b1) == coeffs:
                    # no kink here: extend the previous piece
                    out[-1] = ZPiece(out[-1].lo, hi, *coeffs)
                else:
                    out.append(ZPiece(lo, hi, *coeffs))
            self._pieces = out
        return self._pieces

    def piece_at(self, t) -> ZPiece | OneSided:
        hits = [p for p in self.pieces() if p.contains(t)]
        if len(hits) == 1:
            return hits[0]
        return OneSided(hits[0], hits[1])

    def a(self, t) -> tuple:
        p = self._any_piece(t)
        return _eval(p.a0, p.a1, t)

    def b(self, t) -> tuple:
        p = self._any_piece(t)
        return _eval(p.b0, p.b1, t)

    def _any_piece(self, t) -> ZPiece:
        p = self.piece_at(t)
        return p.left if isinstance(p, OneSided) else p

    def gamma(self, t) -> tuple:
        """``gamma_Z(t) = t b_t - a_t``."""
        return tuple(t * y - x for x, y in zip(self.a(t), self.b(t)))

    def velocity(self, t, piece: ZPiece) -> tuple:
        """``gamma_Z'(t) = b_t + t b' - a'`` on a given piece."""
        bt = _eval(piece.b0, piece.b1, t)
        return tuple(y + t * y1 - x1 for y, y1, x1 in zip(bt, piece.b1, piece.a1))

    def to_dict(self) -> dict:
        return {"a": self.a_path.to_dict(), "b": self.b_path.to_dict()}


def _probe(lo, hi):
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _piece_at(path: PLPath, t) -> Piece:
    for p in path.pieces():
        if (p.lo is None or t > p.lo) and (p.hi is None or t < p.hi):
            return p
    # single-breakpoint constant path: t equals the breakpoint only if probe hit it
    for p in path.pieces():
        if p.contains(t):
            return p
    raise AssertionError("unreachable")


def _piece_mu(p: ZPiece, d, t):
    num = dot(_eval(p.a0, p.a1, t), d) if not isinstance(t, Surd) else _sdot(_eval(p.a0, p.a1, t), d)
    den = dot(_eval(p.b0, p.b1, t), d) if not isinstance(t, Surd) else _sdot(_eval(p.b0, p.b1, t), d)
    return num / den


def _sdot(x, d):
    total = Fraction(0)
    for a, b in zip(x, d):
        total = a * b + total
    return total


def _piece_dmu(p: ZPiece, d, t):
    al0, al1 = dot(p.a0, d), dot(p.a1, d)
    be0, be1 = dot(p.b0, d), dot(p.b1, d)
    den = be0 + be1 * t
    return (al1 * den - be1 * (al0 + al1 * t)) / (den * den)


def mu(z: NonlinearZ, d: Sequence[int], t):
    """Slope ``(a_t . d) / (b_t . d)``; continuous, so breakpoints pose no ambiguity."""
    if not any(d):
        raise ValueError("zero dimension vector")
    return _piece_mu(z._any_piece(t), d, t)


def slope_derivative(z: NonlinearZ, d: Sequence[int], t):
    """
    Exact ``d mu_t(d) / dt``.

    At a breakpoint of ``a`` or ``b`` a :class:`OneSided` pair is returned.
    """
    if not any(d):
        raise ValueError("zero dimension vector")
    p = z.piece_at(t)
    if isinstance(p, OneSided):
        return OneSided(_piece_dmu(p.left, d, t), _piece_dmu(p.right, d, t))
    return _piece_dmu(p, d, t)


def mu_fixed_points(z: NonlinearZ, d: Sequence[int]) -> list:
    """All ``t`` with ``mu_t(d) = t`` (sorted; Surd for irrational roots)."""
    roots = []
    for p in z.pieces():
        # t (b_t . d) - a_t . d = 0
        al0, al1 = dot(p.a0, d), dot(p.a1, d)
        be0, be1 = dot(p.b0, d), dot(p.b1, d)
        rs = quadratic_roots(be1, be0 - al1, -al0)
        if rs is None:
            raise DegeneratePath("mu_t(d) = t on a whole interval")
        for r in rs:
            if p.contains(r) and r not in roots:
                roots.append(r)
    roots.sort()
    return roots


def z_crossings(z: NonlinearZ, walls: Sequence[Wall], allow_breakpoints: bool = False) -> list[Crossing]:
    """
    Crossings of ``gamma_Z`` with the walls, colored by ``gamma_Z' . dim M``.

    Crossing times may be quadratic irrationals.  A crossing at a breakpoint
    raises :class:`DegeneratePath` unless ``allow_breakpoints`` is set, in
    which case it is skipped.
    """
    out = []
    bps = set(z.breakpoints)
    for w in walls:
        for t in mu_fixed_points(z, w.dim):
            point = z.gamma(t)
            if not in_D(point, w):
                continue
            if not isinstance(t, Surd) and t in bps:
                if allow_breakpoints:
                    continue
                raise DegeneratePath(f"{w.module_key} met at breakpoint t={t}")
            p = z.piece_at(t)
            v = z.velocity(t, p)
            s = sign(_sdot(v, w.dim))
            if s == 0:
                raise DegeneratePath(f"tangent contact with {w.module_key} at t={t}")
            out.append(Crossing(t, w.module_key, w.dim, GREEN if s > 0 else RED, point))
    return _sorted_distinct(out)


# ---------------------------------------------------------------------------
# path <-> charge dictionary


def normalize_tails(path: PLPath, f: Sequence[int]) -> PLPath:
    """
    Reparametrize the tails so the path equals ``t f`` far out on both sides.

    The old tail is followed until it is inside the open negative (positive)
    orthant, then joined to the line ``t f`` by a segment inside that orthant,
    which meets no wall.  Crossing times are unchanged.
    """
    f = ratvec(f)
    if path.extend != "linear":
        raise TailError("normalization needs a linearly extended path")
    neg, pos = _tail_signs(path)
    if not neg or not pos:
        raise TailError("tails do not have the reddening signs")
    pcs = path.pieces()
    head, tail = pcs[0], pcs[-1]
    t0, t1 = path.times[0], path.times[-1]
    # earliest time needed for the head to be strictly negative
    ta = t0
    for c, v in zip(path.points[0], head.c1):
        if v > 0:
            ta = min(ta, t0 - c / v)
    ta = Fraction(math.floor(ta) - 1)
    tb = t1
    for c, v in zip(path.points[-1], tail.c1):
        if v > 0:
            tb = max(tb, t1 - c / v)
    tb = Fraction(math.ceil(tb) + 1)
    lo = min(ta, Fraction(0)) - 1
    hi = max(tb, Fraction(0)) + 1
    times = [lo - 1, lo, ta] + list(path.times) + [tb, hi, hi + 1]
    points = [_vscale(lo - 1, f), _vscale(lo, f), head.at(ta)] + list(path.points) + [
        tail.at(tb), _vscale(hi, f), _vscale(hi + 1, f)
    ]
    return PLPath(times, points, "linear")


def z_from_path(path: PLPath, f: Sequence[int]) -> NonlinearZ:
    """
    The charge with ``b_t = f`` and ``a_t = t f - gamma(t)``.

    The path is first tail-normalized, so ``a_t`` vanishes outside a bounded interval.
    """
    f = ratvec(f)
    g = normalize_tails(path, f)
    a_pts = [tuple(t * x - y for x, y in zip(f, p)) for t, p in zip(g.times, g.points)]
    a_path = PLPath(g.times, a_pts, "constant")
    b_path = PLPath([g.times[0]], [f], "constant")
    return NonlinearZ(a_path, b_path)


def path_from_z(z: NonlinearZ) -> PLPath:
    """``gamma_Z`` as a PL path; needs ``b_t`` constant."""
    if len(set(z.b_path.points)) != 1:
        raise ValueError("gamma_Z is piecewise linear only for constant b")
    b = z.b_path.points[0]
    ts = list(z.a_path.times)
    times = [ts[0] - 1] + ts + [ts[-1] + 1]
    pts = [tuple(t * y - x for x, y in zip(z.a(t), b)) for t in times]
    return PLPath(times, pts, "linear")


# ---------------------------------------------------------------------------
# path synthesis


def default_pool_walls(q: Quiver, max_dim: int | None = None) -> list[Wall]:
    """Walls of all indecomposables (finite type) or of exceptional strings up to ``max_dim`` (affine)."""
    try:
        pool = enumerate_indecomposables(q)
    except ValueError:
        pool = exceptional_pool(q, max_dim or 2 * q.n)
    return [wall_of(m) for m in pool]


def synthesize_path_from_mgs(q: Quiver, m: MGS, walls: Sequence[Wall] | None = None,
                             delta=Fraction(1, 4), attempts: int = 6) -> PLPath:
    """
    A green path whose crossings are exactly the c-vectors of ``m``.

    Waypoints: chamber points (column sums of the g-matrices) and, around each
    shared facet, points pulled a fraction ``delta`` from the facet point
    towards the two chamber points.  The result is verified against
    ``walls``; ``delta`` is halved on failure.
    """
    seeds = seeds_along(q, m.mutation_vertices)
    if walls is None:
        cap = max((sum(c) for c in m.c_vectors), default=1)
        walls = default_pool_walls(q, cap)
    centres = [tuple(Fraction(sum(row)) for row in s.G) for s in seeds]
    delta = Fraction(delta)
    last_error = None
    for _ in range(attempts):
        pts = [_vscale(2, centres[0]), centres[0]]
        for k, v in enumerate(m.mutation_vertices, start=1):
            prev = seeds[k - 1]
            shared = [prev.g_vector(j) for j in range(1, q.n + 1) if j != v]
            w = tuple(Fraction(sum(col[i] for col in shared)) for i in range(q.n))
            a = _vadd(w, _vscale(delta, tuple(x - y for x, y in zip(centres[k - 1], w))))
            b = _vadd(w, _vscale(delta, tuple(x - y for x, y in zip(centres[k], w))))
            pts += [a, b, centres[k]]
        pts.append(_vscale(2, centres[-1]))
        path = PLPath(range(len(pts)), pts, "linear")
        try:
            check = validate_reddening(path, walls)
            if not check:
                raise VerificationFailed(f"{check.reason}: {check.detail}")
            cr = crossings(path, walls)
            dims = [c.dim for c in cr]
            if dims != [tuple(c) for c in m.c_vectors] or not all(c.green for c in cr):
                raise VerificationFailed(f"crossings {dims} differ from c-vectors {list(m.c_vectors)}")
            return path
        except (VerificationFailed, DegeneratePath, SimultaneousCrossings) as exc:
            last_error = exc
            delta /= 2
    raise VerificationFailed(str(last_error))
