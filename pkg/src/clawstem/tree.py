"""Trees inside a host graph and their stem decomposition.

The stem of a tree is what remains after deleting its leaves. A vertex of
degree 0 (the singleton tree) is not a leaf, so the singleton is its own
stem; a single edge has two leaves and an empty stem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graph import Edge, Graph, GraphInputError, norm_edge


class InvalidTree(ValueError):
    """An edge set that is not a tree of its host graph."""


@dataclass(frozen=True)
class StemProfile:
    tree_order: int
    leaves: frozenset[int]
    stem_vertices: frozenset[int]
    stem_degrees: dict[int, int]
    stem_branch_vertices: frozenset[int]
    stem_leaves: frozenset[int]
    degree_two_stem: frozenset[int]
    stem_max_degree: int

    @property
    def is_spider_stem(self) -> bool:
        return len(self.stem_branch_vertices) <= 1

    @property
    def branch_count(self) -> int:
        return len(self.stem_branch_vertices)

    @property
    def metrics(self) -> tuple[int, int, int]:
        return (self.tree_order, len(self.stem_leaves), len(self.stem_vertices))


def objective_key(metrics: tuple[int, int, int]) -> tuple[int, int, int]:
    """Larger is better: more vertices, then fewer stem leaves, then a smaller stem."""
    order, stem_leaves, stem_order = metrics
    return (order, -stem_leaves, -stem_order)


class TreeSubgraph:
    """A tree whose edges all belong to ``host``.

    Built either from an edge set (vertices are the endpoints) or, for the
    singleton tree, from ``vertices`` alone.
    """

    def __init__(self, host: Graph, edges: Iterable[Edge] = (), vertices: Iterable[int] = ()):
        self.host = host
        self.edges: frozenset[Edge] = frozenset(norm_edge(u, v) for u, v in edges)
        verts = set(vertices)
        for u, v in self.edges:
            verts.add(u)
            verts.add(v)
        self.vertices: frozenset[int] = frozenset(verts)
        self._validate()

    def _validate(self) -> None:
        if not self.vertices:
            raise InvalidTree("a tree needs at least one vertex")
        for v in self.vertices:
            if not (0 <= v < self.host.n):
                raise InvalidTree(f"vertex {v} not in host graph")
        for u, v in self.edges:
            if not self.host.has_edge(u, v):
                raise InvalidTree(f"edge ({u}, {v}) is not an edge of the host graph")
        if len(self.edges) != len(self.vertices) - 1:
            raise InvalidTree(
                f"{len(self.edges)} edges on {len(self.vertices)} vertices is not a tree"
            )
        adj = self.adjacency
        start = next(iter(self.vertices))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(self.vertices):
            raise InvalidTree("edge set is disconnected")

    def __repr__(self) -> str:
        return f"TreeSubgraph(order={len(self.vertices)}, edges={sorted(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeSubgraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def is_spanning(self) -> bool:
        return len(self.vertices) == self.host.n

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def profile(self) -> StemProfile:
        return stem_profile(self)

    def with_changes(self, removed: Iterable[Edge] = (), added: Iterable[Edge] = ()) -> "TreeSubgraph":
        """Return the tree ``self - removed + added``; raises :class:`InvalidTree`."""
        edges = set(self.edges)
        for e in removed:
            edges.discard(norm_edge(*e))
        for e in added:
            edges.add(norm_edge(*e))
        return TreeSubgraph(self.host, edges)


def leaves(t: TreeSubgraph) -> frozenset[int]:
    return frozenset(v for v, nb in t.adjacency.items() if len(nb) == 1)


def stem_profile(t: TreeSubgraph) -> StemProfile:
    adj = t.adjacency
    leaf = leaves(t)
    stem = frozenset(t.vertices - leaf)
    sdeg = {v: sum(1 for w in adj[v] if w in stem) for v in stem}
    return StemProfile(
        tree_order=len(t.vertices),
        leaves=leaf,
        stem_vertices=stem,
        stem_degrees=sdeg,
        stem_branch_vertices=frozenset(v for v, d in sdeg.items() if d >= 3),
        stem_leaves=frozenset(v for v, d in sdeg.items() if d == 1),
        degree_two_stem=frozenset(v for v, d in sdeg.items() if d == 2),
        stem_max_degree=max(sdeg.values(), default=0),
    )


def count_leaves_by_formula(t: TreeSubgraph) -> int:
    """Leaf count from the branch-vertex degree excesses: sum(deg - 2) + 2."""
    if len(t.vertices) < 2:
        raise GraphInputError("leaf-count formula needs a tree with at least one edge")
    return sum(len(nb) - 2 for nb in t.adjacency.values() if len(nb) >= 3) + 2


def tree_metrics(t: TreeSubgraph) -> tuple[int, int, int]:
    """``(order, stem leaf count, stem order)``."""
    return t.profile.metrics


def spanning_tree_from_stem(g: Graph, stem_edges: Iterable[Edge], stem_vertices: Iterable[int]) -> TreeSubgraph:
    """Hang every vertex outside ``stem_vertices`` on its smallest stem neighbor.

    The stem vertex set must dominate the graph.
    """
    core = set(stem_vertices)
    edges = {norm_edge(*e) for e in stem_edges}
    for v in range(g.n):
        if v in core:
            continue
        hosts = [w for w in g.adj[v] if w in core]
        if not hosts:
            raise GraphInputError(f"vertex {v} is not dominated by the stem")
        edges.add(norm_edge(v, hosts[0]))
    return TreeSubgraph(g, edges, vertices=core)
