"""
Green paths and the charges behind them
=======================================

A piecewise-linear path from the negative to the positive orthant meets
the walls in a definite order.  Every such path comes from a stability
function whose central charge moves with ``t``.
"""

from __future__ import annotations

from greenseq import PLPath, crossings, linear_a, wall_of, z_from_path
from greenseq.paths import path_from_z, z_crossings
from greenseq.repmod import enumerate_indecomposables

q = linear_a(2)
walls = [wall_of(M) for M in enumerate_indecomposables(q)]

path = PLPath([0, 1], [(-1, -2), (2, 1)])
for c in crossings(path, walls):
    print(c.time, c.module_key, c.point, c.color)

# %%
# The matching charge has ``b_t = (1, 1)`` and ``a_t = t b_t - gamma(t)``.
z = z_from_path(path, (1, 1))
print([c.module_key for c in z_crossings(z, walls)])
print(path_from_z(z).canonical().to_dict())

# %%
# A charge with moving ``b`` can cross at quadratic irrational times.
from greenseq import NonlinearZ

z = NonlinearZ(PLPath([0], [(1, 0)], "constant"), PLPath([0, 2], [(1, 1), (3, 1)], "constant"))
for c in z_crossings(z, walls, allow_breakpoints=True):
    print(c.module_key, c.time, float(c.time), c.color)
