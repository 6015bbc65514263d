"""
Cross-checking the four descriptions
====================================

Maximal green sequences, maximal hom-orthogonal sequences, green paths and
HN systems should all describe the same objects.  ``verify`` checks this
for one quiver and writes a JSON report.
"""

from __future__ import annotations

from greenseq import affine_a, b2, kronecker, linear_a, verify

for q in (linear_a(3), kronecker(), affine_a(2, 1), b2()):
    report = verify(q, cap=10)
    print(q.name, report.passed, [(s.name, s.status) for s in report.sections])

# %%
# The per-sequence records show which checks ran.
print(verify(linear_a(2)).to_json()[:600])
