"""
Explicit matrix representations of simply-laced quivers.

A :class:`Representation` stores one rational matrix per arrow.  Modules
built from strings (and direct sums of them) also remember a *coordinate
structure*: a vertex label for each basis vector and the arrow edges between
basis vectors.  Submodule dimension vectors of such modules are read off from
successor-closed sets of basis vectors; a brute-force search over the field
with two elements serves as an independent oracle.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .exactmath import inverse, nullspace, rank, rref
from .quivercore import NonHereditaryError, Quiver, euler_pairing

ORACLE_CAP = 6
COORDINATE_NODE_CAP = 20


class RepresentationError(ValueError):
    pass


class InvalidWalk(RepresentationError):
    pass


class UnsupportedShape(RepresentationError):
    pass


def _zero(rows: int, cols: int) -> tuple:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def _matmul(a, b, rows: int, inner: int, cols: int) -> tuple:
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(inner)), Fraction(0)) for j in range(cols))
        for i in range(rows)
    )


@dataclass(frozen=True)
class Representation:
    """
    A representation of ``quiver`` with a rational matrix for every arrow.

    Parameters
    ----------
    quiver : Quiver
    dims : tuple of int
        Vector space dimension at each vertex.
    maps : tuple
        ``maps[a]`` is the matrix of arrow ``a`` (index into ``quiver.arrows``),
        given as row tuples of shape ``dims[target] x dims[source]``.
    name : str
        Label used as the module key in reports.
    nodes, node_edges : tuple, optional
        Coordinate structure.  ``nodes[i]`` is the vertex of basis vector ``i``
        (global numbering, ordered vertex by vertex within each vertex block is
        *not* required); ``node_edges`` lists ``(arrow, source_node, target_node)``.
    walk : tuple, optional
        The string this module was built from, as ``(arrow, direct)`` letters.
    """

    quiver: Quiver
    dims: tuple
    maps: tuple
    name: str = ""
    nodes: tuple | None = field(default=None, compare=False)
    node_edges: tuple | None = field(default=None, compare=False)
    walk: tuple | None = field(default=None, compare=False)
    start: int | None = field(default=None, compare=False)

    def __post_init__(self):
        q = self.quiver
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) != q.n or any(d < 0 for d in dims):
            raise RepresentationError("dims must be n nonnegative integers")
        if len(self.maps) != len(q.arrows):
            raise RepresentationError("one matrix per arrow is required")
        maps = []
        for (s, t), m in zip(q.arrows, self.maps):
            rows, cols = dims[t - 1], dims[s - 1]
            m = tuple(tuple(Fraction(x) for x in r) for r in m)
            if len(m) != rows or any(len(r) != cols for r in m):
                raise RepresentationError(f"arrow {s}->{t} needs a {rows}x{cols} matrix")
            maps.append(m)
        object.__setattr__(self, "maps", tuple(maps))
        if q.radical_truncation is not None:
            self._check_nilpotent()

    def __repr__(self):
        return f"Representation({self.name or '?'}, dims={self.dims})"

    @property
    def dim(self) -> tuple:
        return self.dims

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def has_coordinates(self) -> bool:
        return self.nodes is not None

    def map(self, a: int) -> tuple:
        return self.maps[a]

    def _check_nilpotent(self):
        """Every path of length k+1 must act as zero."""
        q = self.quiver
        k = q.radical_truncation
        paths = [[a] for a in range(len(q.arrows))]
        for _ in range(k):
            paths = [p + [b] for p in paths for b in range(len(q.arrows)) if q.arrows[b][0] == q.arrows[p[-1]][1]]
        for p in paths:
            s = q.arrows[p[0]][0]
            cur = tuple(tuple(Fraction(int(i == j)) for j in range(self.dims[s - 1])) for i in range(self.dims[s - 1]))
            v = s
            for a in p:
                t = q.arrows[a][1]
                cur = _matmul(self.maps[a], cur, self.dims[t - 1], self.dims[v - 1], self.dims[s - 1])
                v = t
            if any(x != 0 for r in cur for x in r):
                raise RepresentationError(f"path {p} of length {k + 1} does not act as zero")

    # --- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        q = self.quiver
        arrows = {}
        for key, a in _arrow_keys(q).items():
            m = self.maps[a]
            arrows[key] = [[str(x) for x in r] for r in m]
        out = {"dims": list(self.dims), "arrows": arrows}
        if self.name:
            out["name"] = self.name
        return out


def _arrow_keys(q: Quiver) -> dict:
    """JSON keys ``"s->t"`` (``"s->t#k"`` for the k-th parallel copy) mapped to arrow indices."""
    keys = {}
    seen: dict = {}
    for a, (s, t) in enumerate(q.arrows):
        seen[(s, t)] = seen.get((s, t), 0) + 1
        base = f"{s}->{t}"
        keys[base if seen[(s, t)] == 1 else f"{base}#{seen[(s, t)]}"] = a
    return keys


def representation_from_dict(q: Quiver, data: dict) -> Representation:
    dims = tuple(data["dims"])
    keys = _arrow_keys(q)
    maps = [_zero(dims[t - 1], dims[s - 1]) for s, t in q.arrows]
    for key, m in data.get("arrows", {}).items():
        if key not in keys:
            raise RepresentationError(f"unknown arrow key {key!r}")
        maps[keys[key]] = tuple(tuple(Fraction(x) for x in r) for r in m)
    return Representation(q, dims, tuple(maps), name=data.get("name", ""))


# ---------------------------------------------------------------------------
# strings


@dataclass(frozen=True)
class StringSpec:
    """A walk in the quiver: letters ``(arrow_index, direct)`` and a start vertex."""

    walk: tuple
    start: int

    @classmethod
    def from_dict(cls, q: Quiver, data: dict) -> "StringSpec":
        letters = []
        for tok in data["walk"]:
            letters.append(_parse_letter(q, tok))
        return cls(tuple(letters), int(data["start"]))

    def to_dict(self, q: Quiver) -> dict:
        return {"walk": [_letter_token(q, a, d) for a, d in self.walk], "start": self.start}


_LETTER = re.compile(r"^a(\d+)(?:_(\d+))?(?:#(\d+))?(\^-1)?$")


def _parse_letter(q: Quiver, tok: str) -> tuple:
    m = _LETTER.match(tok)
    if not m:
        raise InvalidWalk(f"cannot parse letter {tok!r}")
    if m.group(2) is not None:
        s, t = int(m.group(1)), int(m.group(2))
    else:
        digits = m.group(1)
        if len(digits) != 2:
            raise InvalidWalk(f"ambiguous letter {tok!r}; use the a<s>_<t> form")
        s, t = int(digits[0]), int(digits[1])
    copy = int(m.group(3) or 1)
    matches = [a for a, arr in enumerate(q.arrows) if arr == (s, t)]
    if len(matches) < copy:
        raise InvalidWalk(f"no arrow for letter {tok!r}")
    return matches[copy - 1], m.group(4) is None


def _letter_token(q: Quiver, a: int, direct: bool) -> str:
    s, t = q.arrows[a]
    base = f"a{s}{t}" if s < 10 and t < 10 else f"a{s}_{t}"
    copy = sum(1 for b in range(a) if q.arrows[b] == (s, t))
    if copy:
        base += f"#{copy + 1}"
    return base if direct else base + "^-1"


def walk_vertices(q: Quiver, spec: StringSpec) -> list[int]:
    """Vertices visited by the walk; raises :class:`InvalidWalk` on any defect."""
    v = spec.start
    if not 1 <= v <= q.n:
        raise InvalidWalk(f"start vertex {v} out of range")
    out = [v]
    for a, direct in spec.walk:
        s, t = q.arrows[a]
        if direct:
            if v != s:
                raise InvalidWalk(f"letter {_letter_token(q, a, True)} does not start at {v}")
            v = t
        else:
            if v != t:
                raise InvalidWalk(f"letter {_letter_token(q, a, False)} does not start at {v}")
            v = s
        out.append(v)
    for (a, d), (b, e) in zip(spec.walk, spec.walk[1:]):
        if a == b and d != e:
            raise InvalidWalk("walk is not reduced")
    k = q.radical_truncation
    if k is not None:
        run, last = 0, None
        for _, d in spec.walk:
            run = run + 1 if d == last else 1
            last = d
            if run > k:
                raise InvalidWalk(f"walk contains a path of length {k + 1}, which is zero")
    return out


def _string_name(q: Quiver, spec: StringSpec, verts: list[int]) -> str:
    if not spec.walk:
        return f"S{spec.start}"
    parallel = len(set(q.arrows)) != len(q.arrows)
    parts = [str(verts[0])]
    for (a, d), v in zip(spec.walk, verts[1:]):
        tag = chr(ord("a") + a) if parallel else ""
        parts.append(("-" + tag + ">" if d else "<" + tag + "-") if parallel else (">" if d else "<"))
        parts.append(str(v))
    return "".join(parts)


def string_module(q: Quiver, spec: StringSpec, name: str | None = None) -> Representation:
    """
    The string module of a walk: one basis vector per walk node, identities along the walk.

    Examples
    --------
    >>> from greenseq.quivercore import cyclic_a3
    >>> q = cyclic_a3(2)
    >>> string_module(q, StringSpec(((0, True), (1, True)), 1)).dims
    (1, 1, 1)
    """
    if not q.simply_laced:
        raise RepresentationError("representations of valued quivers are not supported")
    verts = walk_vertices(q, spec)
    nodes = tuple(verts)
    edges = []
    for i, (a, d) in enumerate(spec.walk):
        edges.append((a, i, i + 1) if d else (a, i + 1, i))
    return _from_coordinates(q, nodes, tuple(edges), name or _string_name(q, spec, verts), spec.walk, spec.start)


def _local_index(nodes: Sequence[int]) -> list[int]:
    count: dict = {}
    out = []
    for v in nodes:
        out.append(count.get(v, 0))
        count[v] = out[-1] + 1
    return out


def _from_coordinates(q: Quiver, nodes, edges, name="", walk=None, start=None) -> Representation:
    dims = [0] * q.n
    for v in nodes:
        dims[v - 1] += 1
    loc = _local_index(nodes)
    maps = [[[Fraction(0)] * dims[s - 1] for _ in range(dims[t - 1])] for s, t in q.arrows]
    for a, u, w in edges:
        s, t = q.arrows[a]
        if nodes[u] != s or nodes[w] != t:
            raise RepresentationError("coordinate edge does not match its arrow")
        maps[a][loc[w]][loc[u]] += 1
    return Representation(
        q, tuple(dims), tuple(tuple(tuple(r) for r in m) for m in maps), name,
        nodes=tuple(nodes), node_edges=tuple(edges), walk=walk, start=start,
    )


def coordinate_submodule(M: Representation, subset: Iterable[int], name: str = "") -> Representation:
    """Submodule spanned by a successor-closed set of basis nodes."""
    if not M.has_coordinates:
        raise RepresentationError("module has no coordinate structure")
    keep = sorted(set(subset))
    index = {u: i for i, u in enumerate(keep)}
    for a, u, w in M.node_edges:
        if u in index and w not in index:
            raise RepresentationError("node subset is not closed under arrows")
    edges = tuple((a, index[u], index[w]) for a, u, w in M.node_edges if u in index)
    return _from_coordinates(M.quiver, tuple(M.nodes[u] for u in keep), edges, name)


def coordinate_quotient(M: Representation, subset: Iterable[int], name: str = "") -> Representation:
    """Quotient by the submodule spanned by a successor-closed set of nodes."""
    if not M.has_coordinates:
        raise RepresentationError("module has no coordinate structure")
    drop = set(subset)
    keep = [u for u in range(len(M.nodes)) if u not in drop]
    index = {u: i for i, u in enumerate(keep)}
    edges = tuple((a, index[u], index[w]) for a, u, w in M.node_edges if u in index and w in index)
    return _from_coordinates(M.quiver, tuple(M.nodes[u] for u in keep), edges, name)


def direct_sum(*mods: Representation, name: str | None = None) -> Representation:
    if not mods:
        raise ValueError("need at least one summand")
    q = mods[0].quiver
    if any(m.quiver != q for m in mods):
        raise RepresentationError("summands live over different quivers")
    label = name if name is not None else "+".join(m.name or "?" for m in mods)
    if all(m.has_coordinates for m in mods):
        nodes, edges = [], []
        for m in mods:
            off = len(nodes)
            nodes.extend(m.nodes)
            edges.extend((a, u + off, w + off) for a, u, w in m.node_edges)
        return _from_coordinates(q, tuple(nodes), tuple(edges), label)
    dims = tuple(sum(m.dims[v] for m in mods) for v in range(q.n))
    maps = []
    for a, (s, t) in enumerate(q.arrows):
        rows = []
        col_off = 0
        blocks = []
        for m in mods:
            blocks.append((m.maps[a], m.dims[t - 1], m.dims[s - 1]))
        total_cols = dims[s - 1]
        for blk, r, c in blocks:
            for row in blk:
                rows.append(tuple([Fraction(0)] * col_off + list(row) + [Fraction(0)] * (total_cols - col_off - c)))
            col_off += c
        maps.append(tuple(rows))
    return Representation(q, dims, tuple(maps), label)


def kronecker_band(q: Quiver, lam, name: str | None = None) -> Representation:
    """Regular module ``K --1--> K`` and ``K --lam--> K`` over the Kronecker quiver."""
    if q.n != 2 or q.arrows != ((1, 2), (1, 2)):
        raise UnsupportedShape("the band builder needs the Kronecker quiver")
    lam = Fraction(lam)
    return Representation(q, (1, 1), (((Fraction(1),),), ((lam,),)), name or f"R{lam}")


# ---------------------------------------------------------------------------
# indecomposables


class ModulePool(list):
    """A list of modules with enumeration metadata."""

    def __init__(self, mods=(), partial: bool = False, dim_cap: int | None = None):
        super().__init__(mods)
        self.partial = partial
        self.dim_cap = dim_cap

    def by_dim(self, d) -> list:
        d = tuple(d)
        return [m for m in self if m.dims == d]

    def by_name(self, name: str) -> Representation:
        for m in self:
            if m.name == name:
                return m
        raise KeyError(name)


def _shape(q: Quiver) -> str:
    n = q.n
    adj = {v: set() for v in range(1, n + 1)}
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    connected = _connected(adj)
    if not connected:
        raise UnsupportedShape("quiver is not connected")
    m = len(q.arrows)
    degs = [sum(1 for s, t in q.arrows if v in (s, t)) for v in range(1, n + 1)]
    if m == n - 1 and max(degs, default=0) <= 2:
        return "path"
    if m == n and all(d == 2 for d in degs):
        if q.hereditary:
            return "affine"
        if q.radical_truncation is not None:
            return "cycle"
    raise UnsupportedShape("supported shapes: linear A, truncated oriented cycle, affine A")


def _connected(adj) -> bool:
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _walk_key(walk, start):
    return (start, walk)


def _inverse_spec(q: Quiver, spec: StringSpec) -> StringSpec:
    verts = walk_vertices(q, spec)
    return StringSpec(tuple((a, not d) for a, d in reversed(spec.walk)), verts[-1])


def enumerate_strings(q: Quiver, max_dim: int | None = None) -> list[StringSpec]:
    """All valid strings up to inversion, optionally bounded in total dimension (= length + 1)."""
    shape = _shape(q)
    if shape == "affine" and max_dim is None:
        raise UnsupportedShape("affine quivers have infinitely many strings; pass max_dim")
    bound = max_dim if max_dim is not None else None
    seen = set()
    out = []
    letters = [(a, d) for a in range(len(q.arrows)) for d in (True, False)]

    def extend(spec: StringSpec):
        inv = _inverse_spec(q, spec)
        key = min(_walk_key(spec.walk, spec.start), _walk_key(inv.walk, inv.start))
        if key not in seen:
            seen.add(key)
            out.append(spec if key == _walk_key(spec.walk, spec.start) else inv)
        if bound is not None and len(spec.walk) + 1 >= bound:
            return
        for letter in letters:
            cand = StringSpec(spec.walk + (letter,), spec.start)
            try:
                walk_vertices(q, cand)
            except InvalidWalk:
                continue
            extend(cand)

    for v in range(1, q.n + 1):
        extend(StringSpec((), v))
    out.sort(key=lambda s: (len(s.walk), s.start, s.walk))
    return out


def enumerate_indecomposables(q: Quiver, max_dim: int | None = None) -> ModulePool:
    """
    All string modules, one per isomorphism class.

    For linear A and truncated cycles this is the full list of
    indecomposables.  For affine A only strings up to ``max_dim`` are listed
    (bands are left out) and the pool is flagged ``partial``; use
    :func:`is_exceptional` to pick the exceptional candidates.

    Examples
    --------
    >>> from greenseq.quivercore import cyclic_a3
    >>> len(enumerate_indecomposables(cyclic_a3(1)))
    6
    """
    shape = _shape(q)
    specs = enumerate_strings(q, max_dim)
    mods = [string_module(q, s) for s in specs]
    mods.sort(key=lambda m: (m.total_dim, m.walk is not None and len(m.walk), m.name))
    return ModulePool(mods, partial=shape == "affine", dim_cap=max_dim)


def default_pool(q: Quiver, max_dim: int = 6) -> ModulePool:
    """All indecomposables, or for affine quivers the strings up to ``max_dim``."""
    return enumerate_indecomposables(q, max_dim if _shape(q) == "affine" else None)


def exceptional_pool(q: Quiver, max_dim: int | None = None) -> ModulePool:
    pool = enumerate_indecomposables(q, max_dim)
    return ModulePool([m for m in pool if is_exceptional(m)], pool.partial, pool.dim_cap)


# ---------------------------------------------------------------------------
# Hom and Ext


def _check_same(M: Representation, N: Representation):
    if M.quiver != N.quiver:
        raise RepresentationError("modules live over different quivers")


@lru_cache(maxsize=None)
def hom_basis(M: Representation, N: Representation) -> tuple:
    """
    Basis of Hom(M, N) as tuples of per-vertex matrices ``phi_v`` (``N_v x M_v``).

    Solves ``phi_t M_a = N_a phi_s`` for every arrow ``a: s -> t``.
    """
    _check_same(M, N)
    q = M.quiver
    offsets = []
    total = 0
    for v in range(q.n):
        offsets.append(total)
        total += N.dims[v] * M.dims[v]
    if total == 0:
        return ()

    def var(v, i, j):  # entry (i, j) of phi_v, vertex 0-based
        return offsets[v] + i * M.dims[v] + j

    rows = []
    for a, (s, t) in enumerate(q.arrows):
        s0, t0 = s - 1, t - 1
        Ma, Na = M.maps[a], N.maps[a]
        for i in range(N.dims[t0]):
            for j in range(M.dims[s0]):
                row = [Fraction(0)] * total
                # (phi_t M_a)_{ij} = sum_k phi_t[i,k] M_a[k,j]
                for k in range(M.dims[t0]):
                    if Ma[k][j]:
                        row[var(t0, i, k)] += Ma[k][j]
                # (N_a phi_s)_{ij} = sum_k N_a[i,k] phi_s[k,j]
                for k in range(N.dims[s0]):
                    if Na[i][k]:
                        row[var(s0, k, j)] -= Na[i][k]
                if any(row):
                    rows.append(row)
    basis = nullspace(rows, total) if rows else [
        tuple(Fraction(int(i == j)) for j in range(total)) for i in range(total)
    ]
    out = []
    for vec in basis:
        phi = []
        for v in range(q.n):
            phi.append(tuple(
                tuple(vec[var(v, i, j)] for j in range(M.dims[v])) for i in range(N.dims[v])
            ))
        out.append(tuple(phi))
    return tuple(out)


def hom_dim(M: Representation, N: Representation) -> int:
    """
    Dimension of Hom(M, N).

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> pool = enumerate_indecomposables(linear_a(2))
    >>> S1, P1 = pool.by_name("S1"), pool.by_name("1>2")
    >>> hom_dim(P1, S1), hom_dim(S1, P1)
    (1, 0)
    """
    return len(hom_basis(M, N))


def ext1_dim(M: Representation, N: Representation) -> int:
    """``dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>`` over a hereditary algebra."""
    _check_same(M, N)
    q = M.quiver
    if not q.hereditary:
        raise NonHereditaryError("Ext^1 via the Euler form needs a hereditary algebra")
    e = hom_dim(M, N) - euler_pairing(q, M.dims, N.dims)
    if e < 0:
        raise AssertionError(f"negative Ext^1 for {M.name}, {N.name}")
    return e


def is_schurian(M: Representation) -> bool:
    if not M.quiver.simply_laced:
        raise RepresentationError("valued quivers are not supported")
    return hom_dim(M, M) == 1


def is_exceptional(M: Representation) -> bool:
    return is_schurian(M) and ext1_dim(M, M) == 0


def random_hom(M: Representation, N: Representation, rng: random.Random | None = None) -> tuple | None:
    """A nonzero homomorphism: a random integer combination of the basis (first basis vector without rng)."""
    basis = hom_basis(M, N)
    if not basis:
        return None
    if rng is None:
        return basis[0]
    while True:
        coeffs = [rng.randint(-3, 3) for _ in basis]
        if any(coeffs):
            break
    q = M.quiver
    phi = []
    for v in range(q.n):
        phi.append(tuple(
            tuple(sum((c * b[v][i][j] for c, b in zip(coeffs, basis)), Fraction(0)) for j in range(M.dims[v]))
            for i in range(N.dims[v])
        ))
    return tuple(phi)


def is_hom(M: Representation, N: Representation, phi) -> bool:
    q = M.quiver
    for a, (s, t) in enumerate(q.arrows):
        s0, t0 = s - 1, t - 1
        left = _matmul(phi[t0], M.maps[a], N.dims[t0], M.dims[t0], M.dims[s0])
        right = _matmul(N.maps[a], phi[s0], N.dims[t0], N.dims[s0], M.dims[s0])
        if left != right:
            return False
    return True


def is_mono(M: Representation, phi) -> bool:
    return all(M.dims[v] == 0 or rank(phi[v]) == M.dims[v] for v in range(M.quiver.n))


# ---------------------------------------------------------------------------
# submodules


@dataclass(frozen=True)
class SubmoduleDimSet:
    """Dimension vectors of all submodules, with the method that produced them."""

    dimvecs: frozenset
    source: str = "coordinate"

    def __contains__(self, d) -> bool:
        return tuple(d) in self.dimvecs

    def __iter__(self):
        return iter(sorted(self.dimvecs))

    def __len__(self):
        return len(self.dimvecs)

    def proper_nonzero(self, full) -> list:
        full = tuple(full)
        return [d for d in sorted(self.dimvecs) if any(d) and d != full]


def _closed_subsets(M: Representation) -> list[int]:
    """Bitmasks of successor-closed node sets."""
    count = len(M.nodes)
    if count > COORDINATE_NODE_CAP:
        raise RepresentationError("too many basis nodes for subset enumeration")
    succ = [0] * count
    for _, u, w in M.node_edges:
        succ[u] |= 1 << w
    out = []
    # grow closed sets node by node; a set is closed iff it contains succ of each member
    for mask in range(1 << count):
        ok = True
        m = mask
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if succ[u] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(mask)
    return out


def _mask_dim(M: Representation, mask: int) -> tuple:
    d = [0] * M.quiver.n
    for u, v in enumerate(M.nodes):
        if mask >> u & 1:
            d[v - 1] += 1
    return tuple(d)


def coordinate_submodule_dimvecs(M: Representation) -> SubmoduleDimSet:
    return SubmoduleDimSet(frozenset(_mask_dim(M, m) for m in _closed_subsets(M)), "coordinate")


def closed_node_sets(M: Representation) -> list[frozenset]:
    """Successor-closed node sets of a coordinate module, as frozensets of node indices."""
    return [frozenset(u for u in range(len(M.nodes)) if m >> u & 1) for m in _closed_subsets(M)]


@lru_cache(maxsize=None)
def _f2_subspaces(d: int) -> tuple:
    """All subspaces of F_2^d as frozensets of bitmask vectors."""
    spaces = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for sp in frontier:
            for v in range(1 << d):
                if v in sp:
                    continue
                new = frozenset(sp | {x ^ v for x in sp})
                if new not in spaces:
                    spaces.add(new)
                    nxt.append(new)
        frontier = nxt
    return tuple(sorted(spaces, key=lambda s: (len(s), sorted(s))))


def _f2_matrix(m, rows: int, cols: int) -> list[int]:
    """Images of the unit vectors as bitmasks (column j -> bitmask over rows)."""
    out = []
    for j in range(cols):
        mask = 0
        for i in range(rows):
            x = m[i][j]
            if x.denominator != 1:
                raise RepresentationError("the F_2 oracle needs integral matrices")
            if x.numerator % 2:
                mask |= 1 << i
        out.append(mask)
    return out


def _f2_apply(cols: list[int], v: int) -> int:
    out = 0
    j = 0
    while v:
        if v & 1:
            out ^= cols[j]
        v >>= 1
        j += 1
    return out


def oracle_submodule_dimvecs(M: Representation, cap: int = ORACLE_CAP) -> SubmoduleDimSet:
    """Exhaustive search over subrepresentations of the reduction of ``M`` modulo 2."""
    if M.total_dim > cap:
        raise RepresentationError(f"total dimension {M.total_dim} exceeds oracle cap {cap}")
    q = M.quiver
    f2maps = [_f2_matrix(M.maps[a], M.dims[t - 1], M.dims[s - 1]) for a, (s, t) in enumerate(q.arrows)]
    spaces = [_f2_subspaces(d) for d in M.dims]
    found = set()
    for choice in product(*spaces):
        ok = True
        for a, (s, t) in enumerate(q.arrows):
            target = choice[t - 1]
            if any(_f2_apply(f2maps[a], v) not in target for v in choice[s - 1]):
                ok = False
                break
        if ok:
            found.add(tuple(len(sp).bit_length() - 1 for sp in choice))
    return SubmoduleDimSet(frozenset(found), "oracle")


def submodule_dimvecs(M: Representation, guard: bool = False) -> SubmoduleDimSet:
    """
    Dimension vectors of all submodules of ``M``.

    Modules with a coordinate structure use successor-closed node sets.
    Otherwise the finite-field oracle is used (total dimension at most
    ``ORACLE_CAP``).  With ``guard=True`` the coordinate answer is compared
    with the oracle when possible; on a mismatch the oracle answer is
    returned, tagged ``"oracle-fallback"``.

    Examples
    --------
    >>> from greenseq.quivercore import cyclic_a3
    >>> pool = enumerate_indecomposables(cyclic_a3(1))
    >>> sorted(submodule_dimvecs(pool.by_name("1>2")))
    [(0, 0, 0), (0, 1, 0), (1, 1, 0)]
    """
    if M.has_coordinates:
        coord = _coordinate_cached(M)
        if guard and M.total_dim <= ORACLE_CAP:
            oracle = oracle_submodule_dimvecs(M)
            if oracle.dimvecs != coord.dimvecs:
                return SubmoduleDimSet(oracle.dimvecs, "oracle-fallback")
        return coord
    if M.total_dim <= ORACLE_CAP:
        return oracle_submodule_dimvecs(M)
    raise RepresentationError("no coordinate structure and too large for the oracle")


_coord_cache: dict = {}


def _coordinate_cached(M: Representation) -> SubmoduleDimSet:
    key = (M.quiver, M.nodes, M.node_edges)
    if key not in _coord_cache:
        _coord_cache[key] = coordinate_submodule_dimvecs(M)
    return _coord_cache[key]


def minkowski(a: Iterable, b: Iterable) -> frozenset:
    return frozenset(tuple(x + y for x, y in zip(u, v)) for u in a for v in b)


# ---------------------------------------------------------------------------
# images and quotients


@dataclass(frozen=True)
class ImageQuotient:
    """
    Image and cokernel of ``phi: M -> N``.

    ``embedding[v]`` maps image coordinates into ``N_v``; ``projection[v]``
    maps ``N_v`` onto quotient coordinates; ``lift[v]`` expresses ``phi_v`` in
    image coordinates (so ``embedding o lift = phi``).
    """

    image: Representation
    quotient: Representation
    embedding: tuple
    projection: tuple
    lift: tuple


def _column_space_basis(m, rows: int, cols: int) -> list[tuple]:
    """Independent columns of ``m`` (pivot columns), as column tuples."""
    if rows == 0 or cols == 0:
        return []
    _, piv = rref(m)
    return [tuple(m[i][j] for i in range(rows)) for j in piv]


def image_and_quotient(M: Representation, N: Representation, phi) -> ImageQuotient:
    """
    Vertexwise image of ``phi`` with induced maps, and the quotient ``N / im phi``.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> pool = enumerate_indecomposables(linear_a(2))
    >>> S2, P1 = pool.by_name("S2"), pool.by_name("1>2")
    >>> iq = image_and_quotient(S2, P1, hom_basis(S2, P1)[0])
    >>> iq.image.dims, iq.quotient.dims
    ((0, 1), (1, 0))
    """
    _check_same(M, N)
    if not is_hom(M, N, phi):
        raise RepresentationError("phi is not a homomorphism")
    q = N.quiver
    P, Pinv, r = [], [], []
    for v in range(q.n):
        n_v = N.dims[v]
        cols = _column_space_basis(phi[v], n_v, M.dims[v])
        basis = list(cols)
        for i in range(n_v):
            if len(basis) == n_v:
                break
            e = tuple(Fraction(int(i == j)) for j in range(n_v))
            if rank(basis + [e]) > len(basis):
                basis.append(e)
        # P has the basis vectors as columns
        mat = tuple(tuple(basis[j][i] for j in range(n_v)) for i in range(n_v))
        P.append(mat)
        Pinv.append(tuple(tuple(r_) for r_ in inverse(mat)) if n_v else ())
        r.append(len(cols))
    img_maps, quo_maps = [], []
    for a, (s, t) in enumerate(q.arrows):
        s0, t0 = s - 1, t - 1
        conj = _matmul(
            Pinv[t0], _matmul(N.maps[a], P[s0], N.dims[t0], N.dims[s0], N.dims[s0]),
            N.dims[t0], N.dims[t0], N.dims[s0],
        )
        rs, rt = r[s0], r[t0]
        if any(conj[i][j] for i in range(rt, N.dims[t0]) for j in range(rs)):
            raise AssertionError("image is not a subrepresentation")
        img_maps.append(tuple(tuple(conj[i][j] for j in range(rs)) for i in range(rt)))
        quo_maps.append(tuple(tuple(conj[i][j] for j in range(rs, N.dims[s0])) for i in range(rt, N.dims[t0])))
    img_dims = tuple(r)
    quo_dims = tuple(N.dims[v] - r[v] for v in range(q.n))
    image = Representation(q, img_dims, tuple(img_maps), f"im({N.name})")
    quotient = Representation(q, quo_dims, tuple(quo_maps), f"{N.name}/im")
    embedding = tuple(tuple(tuple(P[v][i][j] for j in range(r[v])) for i in range(N.dims[v])) for v in range(q.n))
    projection = tuple(tuple(Pinv[v][i] for i in range(r[v], N.dims[v])) for v in range(q.n))
    lift = tuple(
        tuple(tuple(sum((Pinv[v][i][k] * phi[v][k][j] for k in range(N.dims[v])), Fraction(0))
                    for j in range(M.dims[v])) for i in range(r[v]))
        for v in range(q.n)
    )
    return ImageQuotient(image, quotient, embedding, projection, lift)


def graph_map_support(M: Representation, N: Representation, phi) -> tuple[frozenset, frozenset] | None:
    """
    Kernel and image node sets of a map that sends basis nodes to basis nodes.

    When every basis vector of ``M`` goes to zero or to a nonzero multiple
    of a single basis vector of ``N``, with distinct targets, the kernel and
    image of ``phi`` are spanned by nodes.  Returns ``(kernel nodes of M,
    image nodes of N)``, or ``None`` for any other map.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> pool = enumerate_indecomposables(linear_a(2))
    >>> P1, S1 = pool.by_name("1>2"), pool.by_name("S1")
    >>> graph_map_support(P1, S1, hom_basis(P1, S1)[0])
    (frozenset({1}), frozenset({0}))
    """
    if not (M.has_coordinates and N.has_coordinates):
        return None
    m_nodes = {}
    for u, loc in enumerate(_local_index(M.nodes)):
        m_nodes[(M.nodes[u], loc)] = u
    n_nodes = {}
    for w, loc in enumerate(_local_index(N.nodes)):
        n_nodes[(N.nodes[w], loc)] = w
    kernel, image = set(), set()
    for v in range(M.quiver.n):
        mat = phi[v]
        for j in range(M.dims[v]):
            rows = [i for i in range(N.dims[v]) if mat[i][j] != 0]
            if not rows:
                kernel.add(m_nodes[(v + 1, j)])
            elif len(rows) == 1:
                w = n_nodes[(v + 1, rows[0])]
                if w in image:
                    return None
                image.add(w)
            else:
                return None
    return frozenset(kernel), frozenset(image)


# ---------------------------------------------------------------------------
# small helpers


def direct_sums_up_to(pool: Sequence[Representation], max_total: int) -> list[tuple]:
    """All multisets of pool members with total dimension at most ``max_total``, as index tuples."""
    out = []

    def rec(start: int, chosen: list, total: int):
        if chosen:
            out.append(tuple(chosen))
        for i in range(start, len(pool)):
            d = pool[i].total_dim
            if d == 0 or total + d > max_total:
                continue
            chosen.append(i)
            rec(i, chosen, total + d)
            chosen.pop()

    rec(0, [], 0)
    return out


def module_to_json(M: Representation) -> str:
    return json.dumps(M.to_dict())
