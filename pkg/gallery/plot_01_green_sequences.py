"""
Maximal green sequences by mutation
===================================

Starting from the framed seed (``C = I``) we mutate only at green vertices
until every c-vector is negative.  For linear A3 this gives nine sequences,
the longest of which visits all six positive roots.
"""

from __future__ import annotations

from greenseq import enumerate_mgs, linear_a

q = linear_a(3)
result = enumerate_mgs(q, max_len=10)

for m in result:
    print(m.mutation_vertices, m.c_vectors)

# %%
# The search is exhaustive below the cap, so the count is exact.
print(len(result), "sequences, longest", result.max_length, result.complete_up_to_cap)

# %%
# The Kronecker quiver has infinitely long green sequences.  A cap keeps the
# search finite, and the result records that it was cut short.
from greenseq import kronecker

kr = enumerate_mgs(kronecker(), max_len=10)
print(kr.to_dict())
