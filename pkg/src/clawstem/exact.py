"""Exact minimum number of stem branch vertices over all spanning trees.

The stem of a spanning tree is a subtree whose vertex set dominates the
graph. Conversely, any tree ``S`` on a connected dominating set ``U`` extends
to a spanning tree (hang every other vertex on a neighbor in ``U``) whose
stem is a subtree of ``S`` and so has no more branch vertices than ``S``.
Hence

    min over spanning trees T of branch(Stem(T))
        = min over connected dominating U of min over spanning trees S of G[U] of branch(S).

The inner minimum is zero exactly when ``G[U]`` has a Hamiltonian path, which
one subset DP answers for every ``U`` at once. Larger values are found by an
edge include/exclude branch and bound on ``G[U]`` where a vertex with three
committed edges is already a branch vertex.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphInputError, norm_edge, require_connected
from .tree import TreeSubgraph, spanning_tree_from_stem

DEFAULT_NODE_LIMIT = int(os.environ.get("CLAWSTEM_NODE_LIMIT", 10_000_000))
DEFAULT_MAX_ORDER = 16


class _LimitHit(Exception):
    pass


@dataclass
class ExactResult:
    min_stem_branch_vertices: int
    optimal_tree: TreeSubgraph
    trees_explored: int
    exhausted: bool


@dataclass
class BudgetResult:
    """``feasible`` is None when the search hit its limit without a witness."""

    feasible: Optional[bool]
    tree: Optional[TreeSubgraph]
    trees_explored: int
    exhausted: bool


class _Counter:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _LimitHit


def _check_size(g: Graph, max_order: int) -> None:
    require_connected(g)
    if g.n == 0:
        raise GraphInputError("the empty graph has no spanning tree")
    if g.n > max_order:
        raise GraphInputError(f"exact search is limited to {max_order} vertices, got {g.n}")


def connected_dominating_masks(g: Graph) -> list[int]:
    """All connected dominating vertex sets, as bitmasks, ordered by (size, mask)."""
    n = g.n
    full = (1 << n) - 1
    closed = [g.adj_mask[v] | (1 << v) for v in range(n)]
    out = []
    for mask in range(1, full + 1):
        dom = 0
        rest = mask
        while rest:
            low = rest & -rest
            dom |= closed[low.bit_length() - 1]
            rest ^= low
        if dom != full:
            continue
        low = mask & -mask
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= g.adj_mask[b.bit_length() - 1]
                frontier ^= b
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        if seen == mask:
            out.append(mask)
    out.sort(key=lambda x: (bin(x).count("1"), x))
    return out


def hamiltonian_path_ends(g: Graph, counter: Optional[_Counter] = None) -> dict[int, int]:
    """Map each vertex set with a Hamiltonian path to the bitmask of possible end vertices."""
    ends: dict[int, int] = {1 << v: 1 << v for v in range(g.n)}
    for mask in range(1, 1 << g.n):
        e = ends.get(mask)
        if not e:
            continue
        if counter is not None:
            counter.tick()
        while e:
            low = e & -e
            v = low.bit_length() - 1
            e ^= low
            ext = g.adj_mask[v] & ~mask
            while ext:
                w = ext & -ext
                ext ^= w
                key = mask | w
                ends[key] = ends.get(key, 0) | w
    return ends


def _hamiltonian_path(g: Graph, ends: dict[int, int], mask: int) -> list[int]:
    v = (ends[mask] & -ends[mask]).bit_length() - 1
    path = [v]
    while mask != 1 << v:
        mask ^= 1 << v
        prev = ends[mask] & g.adj_mask[v]
        v = (prev & -prev).bit_length() - 1
        path.append(v)
    return path[::-1]


def _bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _find(uf: list[int], x: int) -> int:
    while uf[x] != x:
        x = uf[x]
    return x


def _min_branch_tree(
    g: Graph, verts: list[int], bound: int, counter: _Counter
) -> Optional[tuple[int, list[tuple[int, int]]]]:
    """Spanning tree of ``G[verts]`` with the fewest branch vertices, if that is ``<= bound``."""
    idx = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    if nv == 1:
        return (0, [])
    edges = [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx]
    m = len(edges)
    need = nv - 1
    deg = [0] * nv
    chosen: list[int] = []
    best: list = [bound + 1, None]

    def remaining_connects(i: int, uf: list[int]) -> bool:
        tmp = uf[:]
        roots = {_find(tmp, x) for x in range(nv)}
        comps = len(roots)
        for j in range(i, m):
            a, b = edges[j]
            ra, rb = _find(tmp, a), _find(tmp, b)
            if ra != rb:
                tmp[ra] = rb
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int, uf: list[int], branches: int) -> None:
        counter.tick()
        if len(chosen) == need:
            if branches < best[0]:
                best[0] = branches
                best[1] = list(chosen)
            return
        if branches >= best[0] or best[0] == 0:
            return
        if m - i < need - len(chosen) or not remaining_connects(i, uf):
            return
        a, b = edges[i]
        ra, rb = _find(uf, a), _find(uf, b)
        if ra != rb:
            nb = branches + (deg[a] == 2) + (deg[b] == 2)
            if nb < best[0]:
                uf2 = uf[:]
                uf2[ra] = rb
                deg[a] += 1
                deg[b] += 1
                chosen.append(i)
                rec(i + 1, uf2, nb)
                chosen.pop()
                deg[a] -= 1
                deg[b] -= 1
        rec(i + 1, uf, branches)

    rec(0, list(range(nv)), 0)
    if best[1] is None:
        return None
    return best[0], [(verts[edges[j][0]], verts[edges[j][1]]) for j in best[1]]


def _tree_from_stem(g: Graph, mask: int, stem_edges) -> TreeSubgraph:
    return spanning_tree_from_stem(g, stem_edges, _bits(mask))


def _trivial_tree(g: Graph) -> TreeSubgraph:
    if g.n == 1:
        return TreeSubgraph(g, vertices=[0])
    return TreeSubgraph(g, [g.edges[0]])


def _bfs_tree(g: Graph) -> TreeSubgraph:
    seen = {0}
    order = [0]
    edges = []
    for x in order:
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                edges.append(norm_edge(x, y))
    return TreeSubgraph(g, edges)


def min_branch_spanning_tree(
    g: Graph, node_limit: int = DEFAULT_NODE_LIMIT, max_order: int = DEFAULT_MAX_ORDER
) -> ExactResult:
    """Fewest stem branch vertices over all spanning trees of ``g``.

    When the node limit is hit, the best tree found so far is returned with
    ``exhausted=False``.
    """
    _check_size(g, max_order)
    if g.n <= 2:
        return ExactResult(0, _trivial_tree(g), 1, True)
    counter = _Counter(node_limit)
    incumbent = _bfs_tree(g)
    best = incumbent.profile.branch_count
    try:
        doms = connected_dominating_masks(g)
        ends = hamiltonian_path_ends(g, counter)
        for mask in doms:
            if mask in ends:
                path = _hamiltonian_path(g, ends, mask)
                tree = _tree_from_stem(g, mask, zip(path, path[1:]))
                return ExactResult(tree.profile.branch_count, tree, counter.nodes, True)
        for mask in doms:
            if best <= 1:
                break
            found = _min_branch_tree(g, _bits(mask), best - 1, counter)
            if found is not None:
                tree = _tree_from_stem(g, mask, found[1])
                if tree.profile.branch_count < best:
                    best = tree.profile.branch_count
                    incumbent = tree
    except _LimitHit:
        return ExactResult(best, incumbent, counter.nodes, False)
    return ExactResult(best, incumbent, counter.nodes, True)


def has_spanning_tree_with_budget(
    g: Graph, k: int, node_limit: int = DEFAULT_NODE_LIMIT, max_order: int = DEFAULT_MAX_ORDER
) -> BudgetResult:
    """Decide whether some spanning tree's stem has at most ``k`` branch vertices."""
    if k < 0:
        raise GraphInputError(f"budget must be non-negative, got {k}")
    _check_size(g, max_order)
    if g.n <= 2:
        return BudgetResult(True, _trivial_tree(g), 1, True)
    counter = _Counter(node_limit)
    quick = _bfs_tree(g)
    if quick.profile.branch_count <= k:
        return BudgetResult(True, quick, 1, True)
    try:
        doms = connected_dominating_masks(g)
        ends = hamiltonian_path_ends(g, counter)
        for mask in doms:
            if mask in ends:
                path = _hamiltonian_path(g, ends, mask)
                return BudgetResult(True, _tree_from_stem(g, mask, zip(path, path[1:])), counter.nodes, True)
        if k >= 1:
            for mask in doms:
                found = _min_branch_tree(g, _bits(mask), k, counter)
                if found is not None:
                    return BudgetResult(True, _tree_from_stem(g, mask, found[1]), counter.nodes, True)
    except _LimitHit:
        return BudgetResult(None, None, counter.nodes, False)
    return BudgetResult(False, None, counter.nodes, True)
