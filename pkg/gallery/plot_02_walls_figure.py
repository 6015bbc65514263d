"""
Semistability walls of the cyclic algebras
==========================================

Each indecomposable ``M`` of the cyclic A3 algebra with radical cube (or
square, or fourth power) zero has a cone ``D(M)`` inside the hyperplane
perpendicular to ``dim M``.  Projecting the unit sphere stereographically
from ``(1,1,1)`` draws simples as circles, two-ray cones as arcs and
single rays as dots.
"""

from __future__ import annotations

from pathlib import Path

from greenseq import cyclic_a3, render_svg, wall_of
from greenseq.repmod import enumerate_indecomposables
from greenseq.walls import wall_shapes

out = Path("walls")
out.mkdir(exist_ok=True)

for k in (1, 2, 3):
    pool = enumerate_indecomposables(cyclic_a3(k))
    walls = [wall_of(M) for M in pool]
    (out / f"lambda{k}.svg").write_text(render_svg(walls))
    print(k, [(key, kind) for key, kind in wall_shapes(walls)])

# %%
# The three length-four projectives only meet the hyperplane of ``(1,1,1)``
# in one ray each.
pool = enumerate_indecomposables(cyclic_a3(3))
for M in pool:
    if max(M.dims) == 2:
        print(M.name, M.dims, wall_of(M).extreme_rays())
