"""
Which green sequences come from a linear charge?
================================================

For fixed ``b`` the conditions on ``a`` are strict linear inequalities.
A feasible ``a`` is replayed against the whole pool before the verdict
``Linear`` is returned.
"""

from __future__ import annotations

from collections import Counter

from greenseq import enumerate_mgs, linear_a
from greenseq.linstab import linearity_sweep
from greenseq.repmod import enumerate_indecomposables

for n in (2, 3, 4):
    q = linear_a(n)
    pool = enumerate_indecomposables(q)
    verdicts = Counter()
    for m in enumerate_mgs(q, 12):
        seq = [next(M for M in pool if M.dims == c) for c in m.c_vectors]
        verdicts[linearity_sweep(seq, pool).status] += 1
    print(q.name, dict(verdicts))

# %%
# ``Unknown`` only says that neither ``b = f`` nor ``b = (1, ..., 1)``
# worked; other choices of ``b`` may still succeed.
