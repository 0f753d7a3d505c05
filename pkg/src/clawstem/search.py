"""Local search for spanning trees whose stems have few branch vertices.

The search keeps a tree ``T`` whose stem has at most ``k`` branch vertices and
repeatedly applies the best exchange move under the lexicographic objective
(more vertices, then fewer stem leaves, then a smaller stem). Every move kind
is one of the tree exchanges that show an extremal tree cannot be improved.
When no move applies and ``T`` is still not spanning, the same structure
yields a set of far-apart, low-degree vertices that violates the degree-sum
hypothesis; that set is returned as a certificate.

Candidate exchanges are proposed generously (every qualifying choice of
neighbors, not only one) and each is validated by rebuilding the tree, so a
returned move is always a tree within budget that strictly improves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .graph import Edge, Graph, GraphInputError, all_pairs_distances, is_claw_free, norm_edge, require_connected
from .tree import InvalidTree, StemProfile, TreeSubgraph, objective_key

MOVE_KINDS = (
    "EXTEND",
    "LEAF_ATTACH",
    "CLAW_EXCHANGE_A",
    "CLAW_EXCHANGE_B",
    "STEMLEAF_MERGE",
    "REROUTE",
    "PATH_ABSORB",
    "DIST5_EXCHANGE",
)
_KIND_RANK = {k: i for i, k in enumerate(MOVE_KINDS)}

DEFAULT_MAX_ITERATIONS = 10_000

FEASIBLE = "FEASIBLE"
CERTIFICATE = "CERTIFICATE"
STUCK = "STUCK"

# One step of an exchange: ("-", edge) removes, ("+", edge) adds. Steps are
# applied in order, so a rehang followed by removing the new edge cancels out.
Step = tuple[str, Edge]


@dataclass(frozen=True)
class Move:
    kind: str
    removed_edges: tuple[Edge, ...]
    added_edges: tuple[Edge, ...]
    description: str
    result: TreeSubgraph = field(compare=False, repr=False)

    @property
    def objective(self) -> tuple[int, int, int]:
        return self.result.profile.metrics

    def sort_key(self):
        return (
            tuple(-x for x in objective_key(self.objective)),
            _KIND_RANK[self.kind],
            self.removed_edges,
            self.added_edges,
        )


@dataclass
class SearchState:
    tree: TreeSubgraph
    k: int
    claw_free: bool

    @property
    def graph(self) -> Graph:
        return self.tree.host

    @property
    def profile(self) -> StemProfile:
        return self.tree.profile

    @property
    def objective(self) -> tuple[int, int, int]:
        return self.profile.metrics


@dataclass(frozen=True)
class Certificate:
    kind: str  # "T1.7-witness" or "T1.8-witness"
    vertices: tuple[int, ...]
    distances_ok: bool
    degree_sum: int
    bound: int


@dataclass
class CertificateCheck:
    ok: bool
    diagnostics: list[str]


@dataclass
class CertificateFailure:
    target: str
    reason: str
    pair: Optional[tuple[int, int]] = None


@dataclass
class SolveReport:
    outcome: str
    k: int
    tree: TreeSubgraph
    certificate: Optional[Certificate] = None
    moves_applied: list[str] = field(default_factory=list)
    iterations: int = 0
    limit_hit: bool = False
    claw_free: bool = True
    failures: list[CertificateFailure] = field(default_factory=list)


# ---------------------------------------------------------------------------
# move generation


def _apply_steps(edges: frozenset[Edge], steps: Sequence[Step]) -> tuple[set[Edge], tuple[Edge, ...], tuple[Edge, ...]]:
    cur = set(edges)
    for op, e in steps:
        e = norm_edge(*e)
        if op == "-":
            cur.discard(e)
        else:
            cur.add(e)
    removed = tuple(sorted(edges - cur))
    added = tuple(sorted(cur - edges))
    return cur, removed, added


class _Ctx:
    """Per-state lookups shared by the move generators."""

    def __init__(self, state: SearchState):
        t = state.tree
        g = t.host
        p = state.profile
        self.g = g
        self.t = t
        self.p = p
        self.k = state.k
        self.in_tree = t.vertices
        self.outside = [v for v in range(g.n) if v not in t.vertices]
        self.leaf = p.leaves
        self.stem = p.stem_vertices
        self.sdeg = p.stem_degrees
        self.M = p.degree_two_stem
        self.adj = t.adjacency
        self.parent = {u: self.adj[u][0] for u in self.leaf}

    def stem_nbrs(self, w: int) -> list[int]:
        return [x for x in self.adj[w] if x in self.stem]

    def tree_path(self, a: int, b: int) -> list[int]:
        prev = {a: a}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path[::-1]

    def restricted_path(self, src: int, dst: int, allowed: set[int]) -> Optional[list[int]]:
        """Shortest ``src``-``dst`` path in G whose interior lies in ``allowed``.

        Paths of length one are ignored; those are handled by other moves.
        """
        prev = {src: src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in self.g.adj[x]:
                if y == dst and x != src:
                    path = [dst, x]
                    while path[-1] != src:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if y not in prev and y in allowed:
                    prev[y] = x
                    queue.append(y)
        return None

    def absorb_steps(self, path: Sequence[int]) -> list[Step]:
        steps: list[Step] = []
        for x in path[1:-1]:
            if x in self.leaf:
                steps.append(("-", (x, self.parent[x])))
        steps.extend(("+", (a, b)) for a, b in zip(path, path[1:]))
        return steps


Proposal = tuple[str, list[Step], str]


def _gen_extend(c: _Ctx) -> Iterator[Proposal]:
    for v in c.outside:
        for s in c.g.adj[v]:
            if s in c.stem:
                yield "EXTEND", [("+", (s, v))], f"outside {v} joins stem vertex {s} (outside vertices see only leaves)"
            elif s in c.leaf:
                yield "EXTEND", [("+", (s, v))], f"outside {v} joins leaf {s}"


def _gen_leaf_attach(c: _Ctx) -> Iterator[Proposal]:
    for v in c.outside:
        for u in c.g.adj[v]:
            if u not in c.leaf:
                continue
            for w in c.g.adj[u]:
                if w in c.stem and w != c.parent[u]:
                    yield (
                        "LEAF_ATTACH",
                        [("-", (u, c.parent[u])), ("+", (u, w)), ("+", (u, v))],
                        f"leaf {u} moves to stem vertex {w} (stem degree {c.sdeg[w]}) and takes outside {v}",
                    )


def _gen_claw(c: _Ctx) -> Iterator[Proposal]:
    for v in c.outside:
        for u in c.g.adj[v]:
            if u not in c.leaf:
                continue
            for w in c.g.adj[u]:
                if w not in c.M:
                    continue
                a, b = c.stem_nbrs(w)
                kind = "CLAW_EXCHANGE_B" if (a in c.M or b in c.M) else "CLAW_EXCHANGE_A"
                base: list[Step] = []
                if c.parent[u] != w:
                    base = [("-", (u, c.parent[u])), ("+", (u, w))]
                for y, t in ((a, b), (b, a)):
                    if c.g.has_edge(u, y):
                        yield kind, [("-", (u, c.parent[u])), ("+", (u, y)), ("+", (u, v))], (
                            f"claw at {w}: leaf {u} moves to {y}, takes outside {v}"
                        )
                    if c.g.has_edge(u, t):
                        yield kind, base + [("-", (t, w)), ("+", (u, t)), ("+", (u, v))], (
                            f"claw at {w}: {u} spliced between {w} and {t}, takes outside {v}"
                        )
                    if c.g.has_edge(y, t):
                        yield kind, base + [("-", (t, w)), ("+", (t, y)), ("+", (u, v))], (
                            f"claw at {w}: {t} moves from {w} to {y}, leaf {u} takes outside {v}"
                        )


def _gen_stemleaf_merge(c: _Ctx) -> Iterator[Proposal]:
    xs = sorted(c.p.stem_leaves)
    branch = c.p.stem_branch_vertices
    for xi, xj in combinations(xs, 2):
        if not c.g.has_edge(xi, xj):
            continue
        path = c.tree_path(xi, xj)
        for a, b in zip(path, path[1:]):
            if a in branch or b in branch:
                yield "STEMLEAF_MERGE", [("+", (xi, xj)), ("-", (a, b))], (
                    f"adjacent stem leaves {xi},{xj}: add edge, drop cycle edge ({a},{b}) at a branch vertex"
                )


def _gen_reroute(c: _Ctx) -> Iterator[Proposal]:
    for x in sorted(c.p.stem_leaves):
        hanging = [y for y in c.adj[x] if y in c.leaf]
        steps: list[Step] = []
        for y in hanging:
            targets = [z for z in c.g.adj[y] if z in c.stem and z != x]
            if not targets:
                break
            steps += [("-", (y, x)), ("+", (y, targets[0]))]
        else:
            if hanging:
                yield "REROUTE", steps, f"every leaf at stem leaf {x} has another stem neighbor; {x} leaves the stem"


def _gen_path_absorb(c: _Ctx) -> Iterator[Proposal]:
    allowed = set(c.leaf) | set(c.outside)
    xs = sorted(c.p.stem_leaves)
    branch = c.p.stem_branch_vertices
    for v in c.outside:
        for x in xs:
            path = c.restricted_path(v, x, allowed - {v})
            if path is not None:
                yield "PATH_ABSORB", c.absorb_steps(path), (
                    f"path {path} from outside {v} through leaves/outside vertices ends at stem leaf {x}"
                )
    for xi, xj in combinations(xs, 2):
        path = c.restricted_path(xi, xj, allowed)
        if path is None:
            continue
        steps = c.absorb_steps(path)
        cycle = c.tree_path(xi, xj)
        for a, b in zip(cycle, cycle[1:]):
            if a in branch or b in branch:
                yield "PATH_ABSORB", steps + [("-", (a, b))], (
                    f"path {path} joins stem leaves {xi},{xj}; drop cycle edge ({a},{b}) at a branch vertex"
                )


def _gen_dist5(c: _Ctx) -> Iterator[Proposal]:
    for v in c.outside:
        for u in c.g.adj[v]:
            if u not in c.leaf:
                continue
            for s in c.g.adj[u]:
                if s not in c.M:
                    continue
                base: list[Step] = []
                if c.parent[u] != s:
                    base = [("-", (u, c.parent[u])), ("+", (u, s))]
                a, b = c.stem_nbrs(s)
                for y, t in ((a, b), (b, a)):
                    if c.g.has_edge(u, y):
                        yield "DIST5_EXCHANGE", base + [("-", (y, s)), ("+", (u, y)), ("+", (u, v))], (
                            f"leaf {u} rehung on {s}; {u} spliced between {s} and {y}, takes outside {v}"
                        )
                if not c.g.has_edge(a, b):
                    continue
                for z in c.g.adj[s]:
                    if z not in c.leaf or z == u:
                        continue
                    for y in c.g.adj[z]:
                        if y not in c.leaf or y == u:
                            continue
                        x = c.parent[y]
                        if x not in c.p.stem_leaves or x == s:
                            continue
                        steps = base + [
                            ("-", (b, s)), ("-", (a, s)), ("-", (z, c.parent[z])),
                            ("+", (a, b)), ("+", (s, z)), ("+", (z, y)), ("+", (u, v)),
                        ]
                        yield "DIST5_EXCHANGE", steps, (
                            f"claw at {s} with {a}{b} an edge: {s} re-hung via {z},{y} onto stem leaf {x}, "
                            f"{u} takes outside {v}"
                        )


def _proposals(c: _Ctx, claw_free: bool) -> Iterator[Proposal]:
    yield from _gen_extend(c)
    yield from _gen_leaf_attach(c)
    if claw_free:
        yield from _gen_claw(c)
    yield from _gen_stemleaf_merge(c)
    yield from _gen_reroute(c)
    yield from _gen_path_absorb(c)
    if claw_free:
        yield from _gen_dist5(c)


def find_moves(state: SearchState) -> list[Move]:
    """All valid strictly improving moves, best first."""
    c = _Ctx(state)
    current = objective_key(state.objective)
    best: dict[frozenset[Edge], Move] = {}
    for kind, steps, desc in _proposals(c, state.claw_free):
        edges, removed, added = _apply_steps(state.tree.edges, steps)
        if not removed and not added:
            continue
        key = frozenset(edges)
        if key in best and _KIND_RANK[best[key].kind] <= _KIND_RANK[kind]:
            continue
        try:
            result = TreeSubgraph(c.g, edges)
        except InvalidTree:
            continue
        if result.profile.branch_count > state.k:
            continue
        if objective_key(result.profile.metrics) <= current:
            continue
        best[key] = Move(kind, removed, added, desc, result)
    return sorted(best.values(), key=Move.sort_key)


# ---------------------------------------------------------------------------
# seeding and certificates


def _bfs_tree(g: Graph, src: int) -> tuple[dict[int, int], dict[int, int]]:
    prev = {src: src}
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in prev:
                prev[y] = x
                dist[y] = dist[x] + 1
                queue.append(y)
    return prev, dist


def longest_path_seed(g: Graph) -> TreeSubgraph:
    """Path between the ends of a double BFS sweep; ties go to smaller ids."""
    _, dist = _bfs_tree(g, 0)
    a = min(dist, key=lambda v: (-dist[v], v))
    prev, dist = _bfs_tree(g, a)
    b = min(dist, key=lambda v: (-dist[v], v))
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return TreeSubgraph(g, list(zip(path, path[1:])), vertices=[a])


def extract_certificate(state: SearchState, target: str):
    """Build the far-apart low-degree set from a move-free state.

    Returns a :class:`Certificate` or a :class:`CertificateFailure`.
    """
    t = state.tree
    if t.is_spanning:
        raise RuntimeError("certificate requested for a spanning tree")
    g = t.host
    k = state.k
    p = state.profile
    if target not in ("T1.7", "T1.8"):
        raise GraphInputError(f"unknown certificate target {target!r}")
    candidates = sorted(v for v in range(g.n) if v not in t.vertices and any(u in p.leaves for u in g.adj[v]))
    if not candidates:
        return CertificateFailure(target, "tree not extendable but not spanning (internal error)")
    v = candidates[0]
    dist = g.distances
    ys = []
    for x in sorted(p.stem_leaves):
        private = [
            y for y in t.adjacency[x]
            if y in p.leaves and all(w == x or w in p.leaves for w in g.adj[y])
        ]
        if not private:
            return CertificateFailure(target, f"stem leaf {x} has no private leaf")
        ys.append(min(private))
    n = g.n
    if target == "T1.7":
        if len(ys) < k + 2:
            return CertificateFailure(target, f"only {len(ys)} stem leaves, need {k + 2}")
        s = (v, *ys[: k + 2])
        for a, b in combinations(s, 2):
            if not dist.at_least(a, b, 4):
                return CertificateFailure(target, f"vertices {a},{b} at distance {dist(a, b)} < 4", (a, b))
        total = sum(len(g.adj[x]) for x in s)
        bound = n - 2 * k - 6
        if total > bound:
            return CertificateFailure(target, f"degree sum {total} exceeds {bound}")
        return Certificate("T1.7-witness", s, True, total, bound)
    bound = n - 3 * k - 7
    reasons = []
    for y in ys:
        if not dist.at_least(v, y, 5):
            reasons.append((f"vertices {v},{y} at distance {dist(v, y)} < 5", (v, y)))
            continue
        total = len(g.adj[v]) + len(g.adj[y])
        if total > bound:
            reasons.append((f"degree sum {total} of {v},{y} exceeds {bound}", (v, y)))
            continue
        return Certificate("T1.8-witness", (v, y), True, total, bound)
    if not reasons:
        return CertificateFailure(target, "no stem leaves")
    return CertificateFailure(target, reasons[0][0], reasons[0][1])


def verify_certificate(g: Graph, cert: Certificate, k: int) -> CertificateCheck:
    """Recheck a certificate from scratch against ``g``."""
    diags: list[str] = []
    verts = list(cert.vertices)
    if any(not (isinstance(v, int) and 0 <= v < g.n) for v in verts):
        return CertificateCheck(False, [f"vertex out of range in {verts}"])
    if len(set(verts)) != len(verts):
        diags.append("repeated vertex")
    if cert.kind == "T1.7-witness":
        size, l, bound = k + 3, 4, g.n - 2 * k - 6
    elif cert.kind == "T1.8-witness":
        size, l, bound = 2, 5, g.n - 3 * k - 7
    else:
        return CertificateCheck(False, [f"unknown certificate kind {cert.kind!r}"])
    if len(verts) != size:
        diags.append(f"expected {size} vertices, got {len(verts)}")
    dist = all_pairs_distances(g)
    for a, b in combinations(verts, 2):
        if not dist.at_least(a, b, l):
            diags.append(f"pair ({a}, {b}) at distance {dist(a, b)} < {l}")
    total = sum(len(g.adj[v]) for v in verts)
    if total > bound:
        diags.append(f"degree sum {total} > {bound}")
    if total != cert.degree_sum:
        diags.append(f"recorded degree sum {cert.degree_sum} != {total}")
    return CertificateCheck(not diags, diags)


# ---------------------------------------------------------------------------
# driver


def solve(g: Graph, k: int, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> SolveReport:
    if k < 0:
        raise GraphInputError(f"budget must be non-negative, got {k}")
    require_connected(g)
    if g.n == 0:
        raise GraphInputError("the empty graph has no spanning tree")
    claw_free = is_claw_free(g)[0]
    if g.n == 1:
        tree = TreeSubgraph(g, vertices=[0])
    else:
        tree = longest_path_seed(g)
    state = SearchState(tree, k, claw_free)
    report = SolveReport(STUCK, k, tree, claw_free=claw_free)
    while not state.tree.is_spanning:
        if report.iterations >= max_iterations:
            report.limit_hit = True
            report.tree = state.tree
            return report
        moves = find_moves(state)
        if not moves:
            break
        mv = moves[0]
        if objective_key(mv.objective) <= objective_key(state.objective):
            raise AssertionError("move does not improve the objective")
        state = SearchState(mv.result, k, claw_free)
        report.iterations += 1
        report.moves_applied.append(f"{mv.kind}: {mv.description}")
    report.tree = state.tree
    if state.tree.is_spanning:
        report.outcome = FEASIBLE
        return report
    if claw_free:
        for target in ("T1.7", "T1.8"):
            got = extract_certificate(state, target)
            if isinstance(got, Certificate):
                report.outcome = CERTIFICATE
                report.certificate = got
                return report
            report.failures.append(got)
    return report
