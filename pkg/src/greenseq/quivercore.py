"""
Quivers, valuations, the Euler-Ringel form and the initial framed seed.

Vertices are numbered ``1..n``.  An arrow ``(i, j)`` goes from ``i`` to ``j``;
parallel arrows are repeated.  For valued quivers the multiplicity of
``(i, j)`` is the K-dimension of the bimodule on that edge.

Sign convention for the exchange matrix: ``b_ij > 0`` when there are arrows
``i -> j``.  With ``D = diag(f)`` the product ``D B`` is skew-symmetric.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .exactmath import det


class NonHereditaryError(ValueError):
    """The operation needs an acyclic quiver without relations."""


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """
    A (possibly valued) quiver, optionally truncated by a radical power.

    Parameters
    ----------
    n : int
        Number of vertices.
    arrows : sequence of (int, int)
        Arrows ``(source, target)`` with 1-based vertices.
    radical_truncation : int, optional
        ``k`` means the algebra is ``KQ / R^(k+1)``: paths of length ``k+1`` vanish.
    valuations : sequence of int, optional
        ``f_i = dim_K S_i``; all ones by default.
    name : str
        Free-form label used in reports.
    """

    n: int
    arrows: tuple = ()
    radical_truncation: int | None = None
    valuations: tuple | None = None
    name: str = ""

    def __post_init__(self):
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        vals = tuple(int(v) for v in self.valuations) if self.valuations is not None else (1,) * self.n
        object.__setattr__(self, "valuations", vals)
        if self.n < 1:
            raise QuiverError("a quiver needs at least one vertex")
        if len(vals) != self.n or any(v < 1 for v in vals):
            raise QuiverError("valuations must be n positive integers")
        for s, t in arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise QuiverError(f"arrow {(s, t)} has a vertex outside 1..{self.n}")
            if s == t:
                raise QuiverError("loops are not supported")
        if self.radical_truncation is not None and self.radical_truncation < 1:
            raise QuiverError("radical_truncation must be >= 1")
        if not self.is_acyclic() and self.radical_truncation is None:
            raise QuiverError("a quiver with an oriented cycle needs radical_truncation")

    # --- structure -------------------------------------------------------

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a == (i, j))

    def is_acyclic(self) -> bool:
        indeg = [0] * (self.n + 1)
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in range(1, self.n + 1) if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return seen == self.n

    @property
    def hereditary(self) -> bool:
        return self.radical_truncation is None and self.is_acyclic()

    @property
    def simply_laced(self) -> bool:
        return all(v == 1 for v in self.valuations)

    def require_hereditary(self):
        if not self.hereditary:
            raise NonHereditaryError(f"quiver {self.name or ''} is not hereditary".replace("  ", " "))

    # --- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        out = {"n": self.n, "arrows": [list(a) for a in self.arrows]}
        if self.radical_truncation is not None:
            out["radical_truncation"] = self.radical_truncation
        out["valuations"] = list(self.valuations)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        return cls(
            n=int(data["n"]),
            arrows=tuple(tuple(a) for a in data.get("arrows", [])),
            radical_truncation=data.get("radical_truncation"),
            valuations=tuple(data["valuations"]) if data.get("valuations") is not None else None,
            name=data.get("name", ""),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        return cls.from_dict(json.loads(text))


# --- standard examples ---------------------------------------------------


def linear_a(n: int) -> Quiver:
    """Linearly oriented ``A_n``: ``1 -> 2 -> ... -> n``."""
    return Quiver(n, tuple((i, i + 1) for i in range(1, n)), name=f"A{n}")


def kronecker() -> Quiver:
    return Quiver(2, ((1, 2), (1, 2)), name="Kronecker")


def cyclic_a3(k: int) -> Quiver:
    """The oriented 3-cycle modulo the ``(k+1)``-st power of the arrow ideal."""
    return Quiver(3, ((1, 2), (2, 3), (3, 1)), radical_truncation=k, name=f"Lambda{k}")


def affine_a(a: int, b: int) -> Quiver:
    """
    Acyclic orientation of the ``a + b`` cycle with ``a`` arrows one way and ``b`` the other.

    Vertex 1 is the unique source and vertex ``a + 1`` the unique sink.
    ``affine_a(1, 1)`` is the Kronecker quiver; ``affine_a(2, 1)`` has
    arrows ``1->2, 2->3, 1->3``.
    """
    if a < 1 or b < 1:
        raise QuiverError("both orientations need at least one arrow")
    n = a + b
    arrows = [(i, i + 1) for i in range(1, a + 1)]
    # the other path from 1 to a+1 runs through vertices a+2, ..., n
    other = [1] + list(range(a + 2, n + 1)) + [a + 1]
    arrows += [(other[i], other[i + 1]) for i in range(len(other) - 1)]
    return Quiver(n, tuple(arrows), name=f"A~{a},{b}")


def b2() -> Quiver:
    """Valued quiver of type ``B_2``: one arrow ``2 -> 1`` carrying a 2-dimensional bimodule, ``f = (1, 2)``."""
    return Quiver(2, ((2, 1), (2, 1)), valuations=(1, 2), name="B2")


# --- Euler form and g-vectors ---------------------------------------------


def euler_matrix(q: Quiver) -> tuple:
    """``E`` with ``E_ii = f_i`` and ``E_ij = -(arrows i -> j)``."""
    q.require_hereditary()
    n = q.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = q.valuations[i]
    for s, t in q.arrows:
        rows[s - 1][t - 1] -= 1
    return tuple(tuple(r) for r in rows)


def euler_pairing(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """``<d, e> = d^T E e``, which equals dim Hom minus dim Ext^1."""
    E = euler_matrix(q)
    if len(d) != q.n or len(e) != q.n:
        raise ValueError("dimension vectors must have length n")
    return sum(d[i] * E[i][j] * e[j] for i in range(q.n) for j in range(q.n))


def g_from_dim(q: Quiver, d: Sequence[int]) -> tuple:
    """g-vector ``E^T d`` of a module with dimension vector ``d``; then ``g . e = <d, e>``."""
    E = euler_matrix(q)
    if len(d) != q.n:
        raise ValueError("dimension vector must have length n")
    return tuple(sum(d[i] * E[i][j] for i in range(q.n)) for j in range(q.n))


def g_shifted_projective(q: Quiver, i: int) -> tuple:
    """``g(P_i[1]) = -f_i e_i``."""
    return tuple(-q.valuations[i - 1] if j == i - 1 else 0 for j in range(q.n))


def exchange_matrix(q: Quiver) -> tuple:
    """
    Skew-symmetrizable ``B`` with ``b_ij = m_ij / f_i`` and ``b_ji = -m_ij / f_j``.

    ``m_ij`` is the number of arrows ``i -> j``.
    """
    q.require_hereditary()
    n = q.n
    f = q.valuations
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = q.arrow_count(i, j)
            if not m:
                continue
            if m % f[i - 1] or m % f[j - 1]:
                raise QuiverError(f"bimodule dimension {m} on {i}->{j} is incompatible with valuations")
            rows[i - 1][j - 1] += m // f[i - 1]
            rows[j - 1][i - 1] -= m // f[j - 1]
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class ExchangeSeed:
    """
    Framed seed: exchange matrix ``B``, c-matrix ``C`` and g-matrix ``G``.

    Matrices are row tuples; the k-th c-vector (g-vector) is column k of ``C`` (``G``).
    ``D`` is the diagonal of the symmetrizer.
    """

    B: tuple
    C: tuple
    G: tuple
    D: tuple

    @property
    def n(self) -> int:
        return len(self.B)

    def c_vector(self, k: int) -> tuple:
        return tuple(row[k - 1] for row in self.C)

    def g_vector(self, k: int) -> tuple:
        return tuple(row[k - 1] for row in self.G)

    def c_vectors(self) -> list[tuple]:
        return [self.c_vector(k) for k in range(1, self.n + 1)]

    def g_vectors(self) -> list[tuple]:
        return [self.g_vector(k) for k in range(1, self.n + 1)]

    def check(self) -> None:
        """Assert the structural invariants; raises AssertionError with a diagnostic."""
        n = self.n
        for i in range(n):
            for j in range(n):
                if self.D[i] * self.B[i][j] != -self.D[j] * self.B[j][i]:
                    raise AssertionError(f"DB not skew-symmetric at {(i + 1, j + 1)}")
        if abs(det(self.C)) != 1:
            raise AssertionError("C is not unimodular")
        # g-coordinates carry the f_i scaling, so |det G| is the product of the valuations
        if abs(det(self.G)) != math.prod(self.D):
            raise AssertionError("G has the wrong determinant")


def initial_seed(q: Quiver) -> ExchangeSeed:
    """All-shifted-projective seed: ``C = I`` and ``G = -diag(f)``."""
    B = exchange_matrix(q)
    n = q.n
    C = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    G = tuple(tuple(-q.valuations[i] if i == j else 0 for j in range(n)) for i in range(n))
    return ExchangeSeed(B, C, G, tuple(q.valuations))
