"""Brute-force reference implementations used to check the package.

Nothing here calls into the package's algorithms. Graphs are accepted as
``(n, edges)`` so the oracles can be fed either a package ``Graph`` or raw
data, and distances come from networkx.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def as_nx(n: int, edges) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h


def nx_distances(n: int, edges) -> dict[int, dict[int, int]]:
    return dict(nx.all_pairs_shortest_path_length(as_nx(n, edges)))


def far(dist, a: int, b: int, l: int) -> bool:
    d = dist[a].get(b)
    return d is None or d >= l


# --- trees -----------------------------------------------------------------


def tree_degrees(vertices, edges) -> dict[int, int]:
    deg = {v: 0 for v in vertices}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_tree(vertices, edges) -> bool:
    vertices = set(vertices)
    if len(edges) != len(vertices) - 1:
        return False
    if any(u not in vertices or v not in vertices for u, v in edges):
        return False
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def stem_stats(vertices, edges) -> dict:
    """Leaves, stem degrees and the (order, stem leaves, stem order) metrics."""
    vertices = set(vertices)
    deg = tree_degrees(vertices, edges)
    if len(vertices) <= 1:
        leaves: set[int] = set()
    else:
        leaves = {v for v in vertices if deg[v] == 1}
    stem = vertices - leaves
    sdeg = {v: 0 for v in stem}
    for u, v in edges:
        if u in stem and v in stem:
            sdeg[u] += 1
            sdeg[v] += 1
    branch = {v for v in stem if sdeg[v] >= 3}
    xs = {v for v in stem if sdeg[v] == 1}
    return {
        "leaves": leaves,
        "stem": stem,
        "stem_degrees": sdeg,
        "branch": branch,
        "stem_leaves": xs,
        "metrics": (len(vertices), len(xs), len(stem)),
    }


def objective(metrics) -> tuple[int, int, int]:
    order, xs, stem = metrics
    return (order, -xs, -stem)


def all_spanning_trees(n: int, edges):
    """Yield every spanning tree as an edge tuple (naive: all (n-1)-subsets)."""
    verts = range(n)
    if n == 1:
        yield ()
        return
    for sub in combinations(sorted(edges), n - 1):
        if is_tree(verts, sub):
            yield sub


def naive_min_stem_branch(n: int, edges) -> int:
    """Minimum stem branch count over all spanning trees; None if disconnected."""
    best = None
    for t in all_spanning_trees(n, edges):
        b = len(stem_stats(range(n), t)["branch"])
        if best is None or b < best:
            best = b
            if best == 0:
                break
    return best


# --- claws and far sets ----------------------------------------------------


def has_induced_claw(n: int, edges) -> bool:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for quad in combinations(range(n), 4):
        for c in quad:
            rest = [x for x in quad if x != c]
            if all(x in adj[c] for x in rest) and not any(b in adj[a] for a, b in combinations(rest, 2)):
                return True
    return False


def brute_alpha(n: int, edges, l: int) -> int:
    dist = nx_distances(n, edges)
    best = 1 if n else 0
    for size in range(2, n + 1):
        if any(all(far(dist, a, b, l) for a, b in combinations(s, 2)) for s in combinations(range(n), size)):
            best = size
        else:
            break
    return best


def brute_sigma(n: int, edges, l: int, k: int) -> float:
    dist = nx_distances(n, edges)
    deg = tree_degrees(range(n), edges)
    best = float("inf")
    for s in combinations(range(n), k):
        if all(far(dist, a, b, l) for a, b in combinations(s, 2)):
            best = min(best, sum(deg[v] for v in s))
    return best


# --- random inputs ---------------------------------------------------------


def prufer_tree(rng, n: int) -> list[tuple[int, int]]:
    """Uniform random labeled tree on n >= 2 vertices via a Prüfer sequence."""
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return sorted(tuple(sorted(e)) for e in nx.from_prufer_sequence(seq).edges())
