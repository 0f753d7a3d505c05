"""The degree-sum sharpness family G(m, k).

A hub clique on ``z_1..z_{k+3}``; for each ``i`` a clique ``D_i = K_m`` joined
completely to ``z_i`` and to a pendant-side vertex ``v_i``. Vertex numbering
is fixed: hub vertices first, then the ``v_i``, then the ``D`` blocks in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .exact import DEFAULT_NODE_LIMIT, has_spanning_tree_with_budget
from .graph import Graph, GraphInputError, is_claw_free, is_connected
from .invariants import sigma


@dataclass(frozen=True)
class SharpFamilyParams:
    m: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.k < 0:
            raise GraphInputError(f"need m >= 1 and k >= 0, got m={self.m}, k={self.k}")

    @property
    def order(self) -> int:
        return (self.k + 3) * (self.m + 2)


@dataclass(frozen=True)
class LabeledSharpGraph:
    params: SharpFamilyParams
    graph: Graph
    roles: dict[int, tuple]  # vertex -> ("Z", i) | ("V", i) | ("D", i, j), 1-based

    def vertex(self, *role) -> int:
        return self.index[tuple(role)]

    @property
    def index(self) -> dict[tuple, int]:
        return {r: v for v, r in self.roles.items()}

    def role_name(self, v: int) -> str:
        r = self.roles[v]
        if r[0] == "D":
            return f"D{r[1]}_{r[2]}"
        return f"{r[0].lower()}{r[1]}"


def build_sharp_graph(p: SharpFamilyParams) -> LabeledSharpGraph:
    m, c = p.m, p.k + 3
    roles: dict[int, tuple] = {}
    for i in range(c):
        roles[i] = ("Z", i + 1)
        roles[c + i] = ("V", i + 1)
    block = {}
    nxt = 2 * c
    for i in range(c):
        block[i] = list(range(nxt, nxt + m))
        for j, v in enumerate(block[i]):
            roles[v] = ("D", i + 1, j + 1)
        nxt += m
    edges = list(combinations(range(c), 2))
    for i in range(c):
        edges.extend(combinations(block[i], 2))
        for d in block[i]:
            edges.append((i, d))
            edges.append((c + i, d))
    return LabeledSharpGraph(p, Graph(nxt, edges), roles)


@dataclass
class SharpnessReport:
    m: int
    k: int
    order: int
    connected: bool
    claw_free: bool
    sigma4: int
    sigma4_expected: int
    sigma5: Optional[int] = None
    sigma5_expected: Optional[int] = None
    exact_checked: bool = False
    exact_feasible: Optional[bool] = None
    exact_exhausted: Optional[bool] = None
    exact_witness_branch_count: Optional[int] = None
    proof_outcome: Optional[str] = None
    certificate_valid: Optional[bool] = None
    notes: list[str] = field(default_factory=list)

    @property
    def checks(self) -> dict[str, Optional[bool]]:
        return {
            "connected_claw_free": self.connected and self.claw_free,
            "sigma4_equality": self.sigma4 == self.sigma4_expected,
            "sigma5_equality": None if self.sigma5 is None else self.sigma5 == self.sigma5_expected,
            "no_budget_tree": None if not self.exact_checked or not self.exact_exhausted
            else not self.exact_feasible,
            "certificate": self.certificate_valid,
        }

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())


def verify_sharpness(
    p: SharpFamilyParams,
    node_limit: int = DEFAULT_NODE_LIMIT,
    max_exact_order: int = 16,
) -> SharpnessReport:
    """Check the construction against its stated properties.

    Exact and proof-search checks only run when the order is at most
    ``max_exact_order``; otherwise they are recorded as skipped.
    """
    from .search import solve, verify_certificate

    lg = build_sharp_graph(p)
    g = lg.graph
    n, k = g.n, p.k
    rep = SharpnessReport(
        m=p.m,
        k=k,
        order=n,
        connected=is_connected(g),
        claw_free=is_claw_free(g)[0],
        sigma4=sigma(g, 4, k + 3).value,
        sigma4_expected=n - 2 * k - 6,
    )
    if p.m == 1:
        rep.sigma5 = sigma(g, 5, 2).value
        rep.sigma5_expected = n - 3 * k - 7
    if n > max_exact_order:
        rep.notes.append(f"exact and proof-search checks skipped (order {n} > {max_exact_order})")
        return rep
    res = has_spanning_tree_with_budget(g, k, node_limit=node_limit)
    rep.exact_checked = True
    rep.exact_feasible = res.feasible
    rep.exact_exhausted = res.exhausted
    if res.tree is not None:
        rep.exact_witness_branch_count = res.tree.profile.branch_count
        rep.notes.append(
            f"spanning tree with {res.tree.profile.branch_count} stem branch vertices exists"
        )
    report = solve(g, k)
    rep.proof_outcome = report.outcome
    if report.certificate is not None:
        rep.certificate_valid = verify_certificate(g, report.certificate, k).ok
    return rep
