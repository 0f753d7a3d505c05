"""Edge-list documents and JSON run reports.

Edge-list grammar::

    # comment lines start with '#', blank lines are ignored
    n m
    u v        (exactly m lines)

Vertex tokens are integers ``0 <= u < n``. If any endpoint token is not an
integer the document is read in label mode: tokens are arbitrary names,
numbered in order of first appearance, and the label list is returned so
reports can be traced back to the original names.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .graph import Graph, GraphInputError, norm_edge
from .search import Certificate, SolveReport, verify_certificate
from .tree import InvalidTree, TreeSubgraph


class EdgeListError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLine(EdgeListError):
    pass


class VertexOutOfRange(EdgeListError):
    pass


class LoopEdge(EdgeListError):
    pass


class DuplicateEdge(EdgeListError):
    pass


class EdgeCountMismatch(EdgeListError):
    pass


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def parse_edge_list_labeled(text: str) -> tuple[Graph, Optional[list[str]]]:
    """Parse a document; the label list is None for integer documents."""
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedLine(0, "missing header line 'n m'")
    hno, header = lines[0]
    parts = header.split()
    try:
        if len(parts) != 2:
            raise ValueError
        n, m = int(parts[0]), int(parts[1])
        if n < 0 or m < 0:
            raise ValueError
    except ValueError:
        raise MalformedLine(hno, f"header must be two non-negative integers 'n m', got {header!r}") from None
    body = lines[1:]
    raw: list[tuple[int, str, str]] = []
    for no, line in body:
        toks = line.split()
        if len(toks) != 2:
            raise MalformedLine(no, f"expected 'u v', got {line!r}")
        raw.append((no, toks[0], toks[1]))
    if len(raw) != m:
        last = body[-1][0] if body else hno
        raise EdgeCountMismatch(last, f"header declares {m} edges, found {len(raw)}")

    def is_int(tok: str) -> bool:
        try:
            int(tok)
            return True
        except ValueError:
            return False

    labels: Optional[list[str]] = None
    ids: dict[str, int] = {}
    if not all(is_int(a) and is_int(b) for _, a, b in raw):
        labels = []
        for _, a, b in raw:
            for tok in (a, b):
                if tok not in ids:
                    ids[tok] = len(labels)
                    labels.append(tok)
        if len(labels) > n:
            raise VertexOutOfRange(raw[-1][0], f"{len(labels)} distinct labels exceed n={n}")
        labels += [str(i) for i in range(len(labels), n)]

    seen: set[tuple[int, int]] = set()
    edges = []
    for no, a, b in raw:
        u, v = (ids[a], ids[b]) if labels is not None else (int(a), int(b))
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(no, f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise LoopEdge(no, f"loop at vertex {a}")
        e = norm_edge(u, v)
        if e in seen:
            raise DuplicateEdge(no, f"duplicate edge {a} {b}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges), labels


def parse_edge_list(text: str) -> Graph:
    return parse_edge_list_labeled(text)[0]


def serialize_edge_list(g: Graph, comments: Optional[list[str]] = None) -> str:
    out = [f"# {c}" if c else "#" for c in (comments or [])]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def serialize_sharp_graph(lg) -> str:
    p = lg.params
    comments = [f"sharpness family G(m={p.m}, k={p.k}), order {lg.graph.n}", "roles:"]
    comments += [f"role {v} {lg.role_name(v)}" for v in range(lg.graph.n)]
    return serialize_edge_list(lg.graph, comments)


# ---------------------------------------------------------------------------
# reports


def tree_to_json(t: TreeSubgraph) -> dict[str, Any]:
    p = t.profile
    return {
        "vertices": sorted(t.vertices),
        "edges": [list(e) for e in t.sorted_edges()],
        "spanning": t.is_spanning,
        "stem_branch_vertices": sorted(p.stem_branch_vertices),
        "stem_leaves": sorted(p.stem_leaves),
        "stem_order": len(p.stem_vertices),
        "metrics": list(p.metrics),
    }


def certificate_to_json(c: Certificate) -> dict[str, Any]:
    return {
        "kind": c.kind,
        "vertices": list(c.vertices),
        "distances_ok": c.distances_ok,
        "degree_sum": c.degree_sum,
        "bound": c.bound,
    }


def certificate_from_json(d: dict[str, Any]) -> Certificate:
    try:
        return Certificate(
            kind=d["kind"],
            vertices=tuple(int(v) for v in d["vertices"]),
            distances_ok=bool(d.get("distances_ok", True)),
            degree_sum=int(d["degree_sum"]),
            bound=int(d["bound"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed certificate: {exc}") from None


def solve_report_to_json(r: SolveReport) -> dict[str, Any]:
    return {
        "method": "proof",
        "outcome": r.outcome,
        "k": r.k,
        "claw_free": r.claw_free,
        "iterations": r.iterations,
        "limit_hit": r.limit_hit,
        "tree": tree_to_json(r.tree),
        "certificate": None if r.certificate is None else certificate_to_json(r.certificate),
        "moves_applied": r.moves_applied,
        "certificate_failures": [
            {"target": f.target, "reason": f.reason, "pair": None if f.pair is None else list(f.pair)}
            for f in r.failures
        ],
    }


def jsonable(x: Any) -> Any:
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    return x


def dumps_report(report: dict[str, Any]) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def verify_run_report(report: dict[str, Any], g: Graph) -> list[str]:
    """Re-check every tree and certificate embedded in a report against ``g``.

    Returns a list of problems; empty means the report is self-consistent.
    """
    problems: list[str] = []
    result = report.get("result", {})
    k = report.get("parameters", {}).get("k")
    for key in ("tree", "optimal_tree", "witness_tree"):
        tj = result.get(key)
        if not tj:
            continue
        try:
            t = TreeSubgraph(g, [tuple(e) for e in tj["edges"]], vertices=tj["vertices"])
        except InvalidTree as exc:
            problems.append(f"{key}: {exc}")
            continue
        if sorted(t.profile.stem_branch_vertices) != tj["stem_branch_vertices"]:
            problems.append(f"{key}: stem branch vertices do not re-profile")
        if result.get("outcome") == "FEASIBLE" and key == "tree":
            if not t.is_spanning or (k is not None and t.profile.branch_count > k):
                problems.append("feasible tree is not spanning within budget")
    cj = result.get("certificate")
    if cj and k is not None:
        check = verify_certificate(g, certificate_from_json(cj), k)
        problems += [f"certificate: {d}" for d in check.diagnostics]
    return problems
