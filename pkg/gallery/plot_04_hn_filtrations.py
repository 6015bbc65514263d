"""
Harder-Narasimhan filtrations from a green sequence
===================================================

The c-vectors of a maximal green sequence name an ordered list of
exceptional modules.  Every module then has a unique filtration whose
factors come from that list in order.
"""

from __future__ import annotations

from greenseq import HNSystem, NonlinearZ, direct_sum, enumerate_mgs, hn_filtration, hn_type, linear_a
from greenseq.linstab import linearity_sweep
from greenseq.repmod import direct_sums_up_to, enumerate_indecomposables

q = linear_a(3)
pool = enumerate_indecomposables(q)
m = max(enumerate_mgs(q, 10), key=lambda s: s.length)
system = HNSystem([next(M for M in pool if M.dims == c) for c in m.c_vectors])
print([M.name for M in system.modules])

X = direct_sum(pool.by_name("S1"), pool.by_name("1>2>3"))
f = hn_filtration(X, system)
print(f.factor_labels, f.factor_dims)

# %%
# The same strata come out of the t0/t1 recursion for a linear charge
# realizing the sequence.
witness = linearity_sweep(list(system.modules), pool).witness
z = NonlinearZ.linear(witness.a, witness.b)
print(hn_type(X, z).strata)

# %%
# Sweep all modules of total dimension at most four.
for combo in direct_sums_up_to(pool, 3)[:8]:
    Y = direct_sum(*[pool[i] for i in combo])
    print(Y.name, hn_filtration(Y, system).factor_labels)
