"""Immutable undirected graphs on vertices 0..n-1, generators, file formats.

Graphs expose adjacency as frozensets plus two lazily built forms used by
the rest of the package: Python-int bitmasks of closed neighborhoods (fast
for n <= 64) and bit-packed uint64 rows for the array kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

Edge = tuple[int, int]


class FormatError(ValueError):
    """Malformed edge-list text."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph, immutable after construction.

    Edge deletion and complementation return new graphs. Self-loops and
    duplicate edges are rejected at construction.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._edges: tuple[Edge, ...] = tuple(sorted(seen))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._closed[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def _closed(self) -> tuple[frozenset[int], ...]:
        return tuple(self._adj[v] | {v} for v in range(self._n))

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods as Python-int bitmasks (bit w set iff w in N[v])."""
        masks = []
        for v in range(self._n):
            m = 1 << v
            for w in self._adj[v]:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    @cached_property
    def packed_closed(self) -> np.ndarray:
        """Closed neighborhoods packed into uint64 words, shape (n, W).

        Bit w of word w >> 6 in row v is set iff w in N[v].
        """
        n = self._n
        W = max(1, (n + 63) >> 6)
        arr = np.zeros((n, W), dtype=np.uint64)
        if n == 0:
            return arr
        vs = np.arange(n)
        arr[vs, vs >> 6] |= np.uint64(1) << (vs & 63).astype(np.uint64)
        if self._edges:
            es = np.asarray(self._edges, dtype=np.int64)
            for a, b in ((es[:, 0], es[:, 1]), (es[:, 1], es[:, 0])):
                np.bitwise_or.at(
                    arr, (a, b >> 6), np.uint64(1) << (b & 63).astype(np.uint64)
                )
        arr.setflags(write=False)
        return arr

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def delete_edges(self, to_delete: Iterable[Edge]) -> "Graph":
        """New graph without the given edges (edges must exist)."""
        drop = {_norm_edge(u, v) for u, v in to_delete}
        missing = drop - set(self._edges)
        if missing:
            raise ValueError(f"edges not in graph: {sorted(missing)[:3]}")
        return Graph(self._n, [e for e in self._edges if e not in drop])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


# ------------------------------------------------------------ operations ---

def complement(g: Graph) -> Graph:
    """Complement graph: edge uv present iff absent in g."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def find_twins(g: Graph) -> list[Edge]:
    """All pairs u < v with N[u] = N[v], sorted lexicographically."""
    groups: dict[int, list[int]] = {}
    for v, mask in enumerate(g.closed_masks):
        groups.setdefault(mask, []).append(v)
    pairs = []
    for members in groups.values():
        if len(members) > 1:
            pairs.extend(combinations(sorted(members), 2))
    return sorted(pairs)


def dist2_pairs(g: Graph) -> Iterator[Edge]:
    """Pairs u < v at distance 1 or 2, in ascending lexicographic order."""
    masks = g.closed_masks
    for u in range(g.n):
        reach = masks[u]
        for w in g.neighbors(u):
            reach |= masks[w]
        reach >>= u + 1  # keep only v > u
        while reach:
            low = reach & -reach
            yield (u, u + low.bit_length())
            reach ^= low


def degree_stats(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree)."""
    if g.n < 1:
        raise ValueError("degree_stats needs n >= 1")
    degs = [g.degree(v) for v in range(g.n)]
    return (min(degs), max(degs))


# ------------------------------------------------------------- generators --

@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one generated graph; see generate()."""

    kind: str
    n: int = 0
    p: float = 0.0
    seed: int = 0
    r: int = 0
    s: int = 0
    delta: int = 0
    k: int = 0


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(leaves: int) -> Graph:
    """Star K_{1,leaves} with the center at vertex 0."""
    if leaves < 1:
        raise ValueError("star needs >= 1 leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s}: left side 0..r-1, right side r..r+s-1."""
    if r < 1 or s < 1:
        raise ValueError("complete_bipartite needs r, s >= 1")
    return Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def disjoint_cliques(delta: int, k: int) -> Graph:
    """k disjoint cliques of order delta+1 (a (delta)-regular graph)."""
    if delta < 1 or k < 1:
        raise ValueError("disjoint_cliques needs delta, k >= 1")
    size = delta + 1
    edges = []
    for c in range(k):
        base = c * size
        edges.extend(
            (base + i, base + j) for i, j in combinations(range(size), 2)
        )
    return Graph(k * size, edges)


def connected_cliques(delta: int, k: int) -> Graph:
    """disjoint_cliques plus one edge joining the lowest-index vertices of
    consecutive cliques."""
    g = disjoint_cliques(delta, k)
    size = delta + 1
    extra = [(c * size, (c + 1) * size) for c in range(k - 1)]
    return Graph(g.n, list(g.edges()) + extra)


def gnp(n: int, p: float, seed: int) -> Graph:
    """G(n,p): each pair u < v kept independently with probability p.

    One uniform draw per pair in row-major order (u ascending, then v),
    so a fixed seed reproduces the same graph bit-for-bit.
    """
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("gnp needs 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    edges = []
    i = 0
    for u in range(n - 1):
        cnt = n - 1 - u
        hits = np.nonzero(draws[i : i + cnt] < p)[0]
        i += cnt
        edges.extend((u, u + 1 + int(j)) for j in hits)
    return Graph(n, edges)


_FAMILY_BUILDERS = {
    "path": lambda s: path(s.n),
    "cycle": lambda s: cycle(s.n),
    "star": lambda s: star(s.s),
    "complete": lambda s: complete(s.n),
    "complete_bipartite": lambda s: complete_bipartite(s.r, s.s),
    "disjoint_cliques": lambda s: disjoint_cliques(s.delta, s.k),
    "connected_cliques": lambda s: connected_cliques(s.delta, s.k),
    "gnp": lambda s: gnp(s.n, s.p, s.seed),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    try:
        builder = _FAMILY_BUILDERS[spec.kind]
    except KeyError:
        raise ValueError(f"unknown family kind {spec.kind!r}") from None
    return builder(spec)


# ------------------------------------------------------------ file formats -

def write_edge_list(g: Graph) -> str:
    """Edge-list text: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises FormatError on any violation."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise FormatError("negative n or m")
    if len(lines) - 1 != m:
        raise FormatError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {i}: non-integer endpoint") from exc
        if not (0 <= u < v < n):
            raise FormatError(f"line {i}: need 0 <= u < v < n, got {u} {v}")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def to_dot(g: Graph) -> str:
    """DOT text for visualization (undirected, default attributes)."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
