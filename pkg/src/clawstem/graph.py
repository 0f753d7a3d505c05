"""Immutable simple graphs on vertices ``0..n-1``.

Everything downstream (tree decomposition, invariant search, solvers) indexes
adjacency by integer, so labels from input files are mapped before a
:class:`Graph` is built.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

UNREACHABLE = -1

Edge = tuple[int, int]


class GraphInputError(ValueError):
    """Raised for malformed graphs, bad vertex ids or unsupported inputs."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph.

    Vertices are ``0..n-1``. ``edges`` is stored as a sorted tuple of pairs
    ``(u, v)`` with ``u < v``; loops and repeated pairs are rejected.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            key = norm_edge(u, v)
            if key in seen:
                raise GraphInputError(f"duplicate edge {key}")
            seen.add(key)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.adj_mask: tuple[int, ...] = tuple(
            sum(1 << w for w in a) for a in self.adj
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __len__(self) -> int:
        return self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphInputError(f"vertex {v!r} not in 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adj[v]

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)


class DistanceMatrix:
    """Hop distances; unreachable pairs hold :data:`UNREACHABLE`."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence[int]]):
        self.n = n
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)

    def __call__(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] != UNREACHABLE

    def at_least(self, u: int, v: int, l: int) -> bool:
        """True when ``d(u, v) >= l``; unreachable pairs count as infinitely far."""
        d = self.rows[u][v]
        return d == UNREACHABLE or d >= l


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, [bfs_distances(g, s) for s in range(g.n)])


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphInputError("graph is not connected")


def is_claw_free(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """Return ``(True, None)`` or ``(False, (center, a, b, c))`` for an induced claw.

    The witness is the first claw found scanning centers and leaf triples in
    increasing order.
    """
    for c in range(g.n):
        nbrs = g.adj[c]
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return False, (c, a, b, d)
    return True, None


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``; vertices keep their relative order."""
    verts = sorted(set(s))
    for v in verts:
        g.check_vertex(v)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(verts), edges), relabel


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` of the result is ``g.edges[i]``."""
    index = {e: i for i, e in enumerate(g.edges)}
    out = set()
    for v in range(g.n):
        incident = [index[norm_edge(v, w)] for w in g.adj[v]]
        for a, b in combinations(incident, 2):
            out.add(norm_edge(a, b))
    return Graph(g.m, out)


# Small named graphs, used by tests and the CLI.

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
