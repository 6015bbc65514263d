"""
Fomin-Zelevinsky mutation of framed seeds and maximal green sequences.

The c-matrix is mutated together with ``B`` by the extended-matrix rule.
The g-matrix follows the dual rule, which keeps ``G^T C = -D`` (with
``D = diag(f)``) along every mutation path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .quivercore import ExchangeSeed, Quiver, initial_seed


class SignCoherenceError(AssertionError):
    """A c-vector with entries of both signs was produced."""


@dataclass(frozen=True)
class MGS:
    """A maximal green sequence: the mutated vertices and the c-vectors they consumed."""

    mutation_vertices: tuple
    c_vectors: tuple

    @property
    def length(self) -> int:
        return len(self.mutation_vertices)

    def to_dict(self) -> dict:
        return {"vertices": list(self.mutation_vertices), "c_vectors": [list(c) for c in self.c_vectors]}


@dataclass
class MGSResult:
    """Output of :func:`enumerate_mgs`; iterable over the sequences."""

    sequences: list
    max_len: int
    complete_up_to_cap: bool

    @property
    def max_length(self) -> int:
        return max((m.length for m in self.sequences), default=0)

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self):
        return len(self.sequences)

    def to_dict(self) -> dict:
        return {
            "mgs": [m.to_dict() for m in self.sequences],
            "max_length": self.max_length,
            "complete_up_to_cap": self.complete_up_to_cap,
        }


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate(seed: ExchangeSeed, k: int) -> ExchangeSeed:
    """
    Mutate a framed seed at vertex ``k`` (1-based).

    Examples
    --------
    >>> from greenseq.quivercore import linear_a, initial_seed
    >>> mutate(initial_seed(linear_a(2)), 1).c_vectors()
    [(-1, 0), (1, 1)]
    """
    n = seed.n
    if not 1 <= k <= n:
        raise IndexError(f"vertex {k} out of range 1..{n}")
    k0 = k - 1
    ext = [list(r) for r in seed.B] + [list(r) for r in seed.C]
    new = []
    for i, row in enumerate(ext):
        out = []
        for j, x in enumerate(row):
            if i == k0 or j == k0:
                out.append(-x)
            else:
                xik, xkj = row[k0], ext[k0][j]
                out.append(x + _sgn(xik) * _pos(xik * xkj))
        new.append(tuple(out))
    B = tuple(new[:n])
    C = tuple(new[n:])

    ck = seed.c_vector(k)
    eps = 1 if any(x > 0 for x in ck) else -1
    cols = seed.g_vectors()
    gk = [-x for x in cols[k0]]
    for i in range(n):
        w = _pos(-eps * seed.B[i][k0])
        if w:
            gk = [a + w * b for a, b in zip(gk, cols[i])]
    cols[k0] = tuple(gk)
    G = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return ExchangeSeed(B, C, G, seed.D)


def is_sign_coherent(v) -> bool:
    return all(x >= 0 for x in v) or all(x <= 0 for x in v)


def green_vertices(seed: ExchangeSeed) -> list[int]:
    """Vertices whose c-vector is nonnegative and nonzero."""
    out = []
    for k, c in enumerate(seed.c_vectors(), start=1):
        if not is_sign_coherent(c):
            raise SignCoherenceError(f"c-vector {c} at vertex {k} is not sign-coherent")
        if any(x > 0 for x in c):
            out.append(k)
    return out


def is_terminal(seed: ExchangeSeed) -> bool:
    return all(x <= 0 for row in seed.C for x in row)


def _check_terminal(seed: ExchangeSeed) -> None:
    n = seed.n
    cols = seed.c_vectors()
    units = sorted(tuple(-x for x in c) for c in cols)
    expected = sorted(tuple(int(i == j) for i in range(n)) for j in range(n))
    if units != expected:
        raise AssertionError(f"terminal c-matrix is not minus a permutation: {seed.C}")


def enumerate_mgs(q: Quiver, max_len: int) -> MGSResult:
    """
    All maximal green sequences of length at most ``max_len``.

    The search is exhaustive up to the cap.  Subtrees are memoized on
    ``(B, C, remaining length)``; this only shares work and removes nothing.
    ``complete_up_to_cap`` is False when some green branch was still open
    when the cap cut it off, meaning longer sequences may exist.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> [m.c_vectors for m in enumerate_mgs(linear_a(2), 10)]
    [((1, 0), (1, 1), (0, 1)), ((0, 1), (1, 0))]
    """
    if max_len < q.n:
        raise ValueError("max_len must be at least the number of vertices")
    seed = initial_seed(q)
    memo: dict = {}
    truncated = False

    def search(s: ExchangeSeed, remaining: int) -> tuple:
        nonlocal truncated
        key = (s.B, s.C, remaining)
        if key in memo:
            return memo[key]
        if is_terminal(s):
            _check_terminal(s)
            memo[key] = ((),)
            return memo[key]
        greens = green_vertices(s)
        if remaining == 0:
            truncated = True
            memo[key] = ()
            return ()
        found = []
        for k in greens:
            ck = s.c_vector(k)
            for tail in search(mutate(s, k), remaining - 1):
                found.append(((k, ck),) + tail)
        memo[key] = tuple(found)
        return memo[key]

    seqs = [
        MGS(tuple(k for k, _ in steps), tuple(c for _, c in steps))
        for steps in search(seed, max_len)
    ]
    seqs.sort(key=lambda m: m.mutation_vertices)
    return MGSResult(seqs, max_len, not truncated)


def seeds_along(q: Quiver, vertices) -> list[ExchangeSeed]:
    """Seeds ``T_0, ..., T_m`` visited by mutating at ``vertices`` in order."""
    s = initial_seed(q)
    out = [s]
    for k in vertices:
        s = mutate(s, k)
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# chambers


def chamber_key(seed: ExchangeSeed) -> tuple:
    return tuple(sorted(seed.g_vectors()))


@dataclass
class ChamberAtlas:
    """
    Chambers (as sorted g-column tuples) and the walls between them.

    ``edges`` maps a frozenset of two chamber keys to the wall label, the
    absolute c-vector of the mutation joining them.
    """

    chambers: set = field(default_factory=set)
    edges: dict = field(default_factory=dict)
    partial: bool = False

    def neighbours(self, key) -> list:
        return [next(iter(e - {key})) for e in self.edges if key in e]


def chamber_atlas(q: Quiver, max_chambers: int = 1000) -> ChamberAtlas:
    """
    Breadth-first closure of the initial chamber under mutation.

    Stops when ``max_chambers`` chambers are known; ``partial`` is then set.

    Examples
    --------
    >>> from greenseq.quivercore import linear_a
    >>> len(chamber_atlas(linear_a(2)).chambers)
    5
    """
    start = initial_seed(q)
    atlas = ChamberAtlas()
    atlas.chambers.add(chamber_key(start))
    queue = deque([start])
    while queue:
        s = queue.popleft()
        key = chamber_key(s)
        for k in range(1, q.n + 1):
            c = s.c_vector(k)
            if not is_sign_coherent(c):
                raise SignCoherenceError(f"c-vector {c} is not sign-coherent")
            t = mutate(s, k)
            tkey = chamber_key(t)
            if tkey not in atlas.chambers:
                if len(atlas.chambers) >= max_chambers:
                    atlas.partial = True
                    continue
                atlas.chambers.add(tkey)
                queue.append(t)
            atlas.edges[frozenset((key, tkey))] = tuple(abs(x) for x in c)
    return atlas
