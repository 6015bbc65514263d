"""
Semistability cones D(M) and their stereographic pictures.

``D(M)`` is the set of ``x`` with ``x . dim M = 0`` and ``x . dim M' <= 0``
for every submodule ``M'``.  It is stored as a :class:`ConeHRep`.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exactmath import ConeHRep, cone_extreme_rays, dot
from .repmod import Representation, SubmoduleDimSet, submodule_dimvecs


@dataclass(frozen=True)
class Wall:
    """The cone ``D(M)`` of one module."""

    module_key: str
    dim: tuple
    sub_dimvecs: SubmoduleDimSet
    cone: ConeHRep

    @property
    def proper(self) -> tuple:
        """Proper nonzero submodule dimension vectors (the inequality normals)."""
        return self.cone.inequalities

    def extreme_rays(self):
        return cone_extreme_rays(self.cone, len(self.dim))


def _check_len(x, d):
    if len(x) != len(d):
        raise ValueError(f"length mismatch: {len(x)} vs {len(d)}")


def in_H(x: Sequence, d: Sequence) -> bool:
    """Whether ``x`` lies on the hyperplane perpendicular to ``d``."""
    _check_len(x, d)
    return dot(x, d) == 0


def in_D(x: Sequence, w: Wall) -> bool:
    _check_len(x, w.dim)
    return dot(x, w.dim) == 0 and all(dot(x, v) <= 0 for v in w.proper)


def in_int_D(x: Sequence, w: Wall) -> bool:
    """Relative interior: strict inequalities for all proper nonzero submodules."""
    _check_len(x, w.dim)
    return dot(x, w.dim) == 0 and all(dot(x, v) < 0 for v in w.proper)


def wall_of(M: Representation, guard: bool = False) -> Wall:
    """
    Assemble ``D(M)`` from the submodule dimension vectors of ``M``.

    Examples
    --------
    >>> from greenseq.quivercore import cyclic_a3
    >>> from greenseq.repmod import enumerate_indecomposables
    >>> w = wall_of(enumerate_indecomposables(cyclic_a3(1)).by_name("1>2"))
    >>> w.cone.equalities, w.cone.inequalities
    (((1, 1, 0),), ((0, 1, 0),))
    """
    subs = submodule_dimvecs(M, guard=guard)
    full = tuple(M.dims)
    ineq = tuple(sorted(subs.proper_nonzero(full)))
    return Wall(M.name, full, subs, ConeHRep((full,), ineq))


def in_D_sum(x: Sequence, walls: Iterable[Wall]) -> bool:
    """Membership in ``D(A + B + ...)`` computed as the intersection of the summands' cones."""
    return all(in_D(x, w) for w in walls)


def wide_category(x: Sequence, pool: Sequence[Representation]) -> list[str]:
    """Keys of the pool modules whose cone contains ``x``."""
    return [M.name for M in pool if in_D(x, wall_of(M))]


# ---------------------------------------------------------------------------
# rendering


@dataclass(frozen=True)
class RenderSpec:
    """
    Parameters for :func:`render_svg`.

    The pole is projected to infinity; the image plane touches the sphere
    at the antipode.  ``colors`` maps total dimension to a stroke colour.
    """

    pole: tuple = (1, 1, 1)
    size: int = 800
    margin: int = 40
    stroke_width: float = 2.0
    dot_radius: float = 5.0
    colors: dict = field(default_factory=lambda: {1: "black", 2: "blue", 3: "red", 4: "green"})

    def color(self, total: int) -> str:
        return self.colors.get(total, "gray")


class RenderError(ValueError):
    pass


def _unit(v) -> tuple:
    v = tuple(float(a) for a in v)
    r = math.sqrt(sum(a * a for a in v))
    return tuple(a / r for a in v)


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Projector:
    def __init__(self, pole):
        self.p = _unit(pole)
        # orthonormal basis of the image plane
        p = self.p
        a = (1.0, 0.0, 0.0) if abs(p[0]) < 0.9 else (0.0, 1.0, 0.0)
        u = _cross(p, a)
        self.u = _unit(u)
        self.w = _cross(p, self.u)

    def __call__(self, s) -> tuple:
        s = _unit(s)
        sp = sum(a * b for a, b in zip(s, self.p))
        if sp > 1 - 1e-12:
            raise RenderError("point at the projection pole")
        lam = 2.0 / (1.0 - sp)
        y = tuple(pc + lam * (sc - pc) for pc, sc in zip(self.p, s))
        return (sum(a * b for a, b in zip(y, self.u)), sum(a * b for a, b in zip(y, self.w)))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _circumcircle(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-12:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    return (ux, uy), math.hypot(ax - ux, ay - uy)


def _wall_shape(w: Wall, proj: _Projector) -> tuple:
    """Classify the spherical trace of a wall and return projected geometry."""
    lin, rays = w.extreme_rays()
    lin = [_unit(v) for v in lin]
    rays = [_unit(v) for v in rays]
    if len(lin) == 2:
        a, b = lin
        pts = [a, b, tuple(-x for x in a)]
        return ("circle", [proj(p) for p in pts])
    if len(lin) == 1 and len(rays) == 1:
        l = lin[0]
        pts = [l, rays[0], tuple(-x for x in l)]
        return ("arc", [proj(p) for p in pts])
    if len(lin) == 0 and len(rays) == 2:
        mid = _unit(tuple(x + y for x, y in zip(*rays)))
        return ("arc", [proj(rays[0]), proj(mid), proj(rays[1])])
    if len(lin) == 0 and len(rays) == 1:
        return ("dot", [proj(rays[0])])
    if len(lin) == 1 and not rays:
        l = lin[0]
        return ("dots", [proj(l), proj(tuple(-x for x in l))])
    if not lin and not rays:
        return ("empty", [])
    raise RenderError(f"unexpected cone shape for {w.module_key}")


def render_svg(walls: Sequence[Wall], spec: RenderSpec | None = None) -> str:
    """
    Stereographic picture of the traces ``D(M) ∩ S^2`` of rank-3 walls.

    Whole hyperplanes become circles, two-ray cones and half-planes become
    circular arcs, single rays become dots.  Output bytes depend only on the
    inputs.
    """
    spec = spec or RenderSpec()
    if any(len(w.dim) != 3 for w in walls):
        raise RenderError("rendering needs ambient dimension 3")
    pole = tuple(spec.pole)
    for w in walls:
        if dot(pole, w.dim) == 0:
            raise RenderError(f"pole lies on the hyperplane of {w.module_key}")
    proj = _Projector(pole)
    shapes = [(w, *_wall_shape(w, proj)) for w in walls]

    # bounding box in plane coordinates
    xs, ys = [], []
    geo = []
    for w, kind, pts in shapes:
        if kind in ("circle", "arc"):
            cc = _circumcircle(*pts)
            if cc is None:
                raise RenderError(f"degenerate arc for {w.module_key}")
            (cx, cy), r = cc
            if kind == "circle":
                xs += [cx - r, cx + r]
                ys += [cy - r, cy + r]
            else:
                for p in pts:
                    xs.append(p[0])
                    ys.append(p[1])
                # include the extreme points of the circle that the arc passes
                for ang in (0, math.pi / 2, math.pi, 3 * math.pi / 2):
                    q = (cx + r * math.cos(ang), cy + r * math.sin(ang))
                    if _on_arc(pts, (cx, cy), q):
                        xs.append(q[0])
                        ys.append(q[1])
            geo.append((w, kind, pts, cc))
        else:
            for p in pts:
                xs.append(p[0])
                ys.append(p[1])
            geo.append((w, kind, pts, None))
    if not xs:
        xs, ys = [-1.0, 1.0], [-1.0, 1.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (spec.size - 2 * spec.margin) / span
    cx0 = (max(xs) + min(xs)) / 2
    cy0 = (max(ys) + min(ys)) / 2
    half = spec.size / 2

    def screen(p):
        return (half + (p[0] - cx0) * scale, half - (p[1] - cy0) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f'<rect x="0" y="0" width="{spec.size}" height="{spec.size}" fill="white"/>',
    ]
    sw = _fmt(spec.stroke_width)
    for w, kind, pts, cc in geo:
        color = spec.color(sum(w.dim))
        title = f"<title>{escape(w.module_key)} {list(w.dim)}</title>"
        if kind == "circle":
            (cx, cy), r = cc
            sx, sy = screen((cx, cy))
            out.append(
                f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="{_fmt(r * scale)}" fill="none" '
                f'stroke="{color}" stroke-width="{sw}">{title}</circle>'
            )
        elif kind == "arc":
            a, m, b = (screen(p) for p in pts)
            scc = _circumcircle(a, m, b)
            (ux, uy), r = scc
            a0 = math.atan2(a[1] - uy, a[0] - ux)
            am = math.atan2(m[1] - uy, m[0] - ux)
            a1 = math.atan2(b[1] - uy, b[0] - ux)
            d1 = (a1 - a0) % (2 * math.pi)
            dm = (am - a0) % (2 * math.pi)
            if dm < d1:
                sweep, extent = 1, d1
            else:
                sweep, extent = 0, 2 * math.pi - d1
            large = 1 if extent > math.pi else 0
            out.append(
                f'<path d="M {_fmt(a[0])} {_fmt(a[1])} A {_fmt(r)} {_fmt(r)} 0 {large} {sweep} '
                f'{_fmt(b[0])} {_fmt(b[1])}" fill="none" stroke="{color}" stroke-width="{sw}">{title}</path>'
            )
        elif kind in ("dot", "dots"):
            for p in pts:
                sx, sy = screen(p)
                out.append(
                    f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="{_fmt(spec.dot_radius)}" '
                    f'fill="{color}">{title}</circle>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _on_arc(pts, centre, q) -> bool:
    a, m, b = pts
    ang = [math.atan2(p[1] - centre[1], p[0] - centre[0]) for p in (a, m, b, q)]
    two = 2 * math.pi
    d1 = (ang[2] - ang[0]) % two
    dm = (ang[1] - ang[0]) % two
    dq = (ang[3] - ang[0]) % two
    if dm < d1:
        return dq <= d1
    return dq >= d1


def wall_shapes(walls: Sequence[Wall], spec: RenderSpec | None = None) -> list[tuple]:
    """``(module_key, kind)`` for each wall, where kind is circle, arc, dot, dots or empty."""
    proj = _Projector(tuple((spec or RenderSpec()).pole))
    return [(w.module_key, _wall_shape(w, proj)[0]) for w in walls]
