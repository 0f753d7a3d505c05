"""Corpus-wide cross-check of the hypothesis checker and both solvers."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .corpus import generate_clawfree_corpus
from .exact import DEFAULT_NODE_LIMIT, has_spanning_tree_with_budget
from .graph import Graph, is_claw_free
from .invariants import check_hypothesis, sigma
from .search import CERTIFICATE, FEASIBLE, solve, verify_certificate


@dataclass
class InstanceOutcome:
    index: int
    n: int
    m: int
    k: int
    claw_free: bool
    t17_holds: bool
    t18_holds: bool
    proof_outcome: str
    proof_iterations: int
    exact_feasible: Optional[bool]
    exact_exhausted: bool
    certificate: Optional[list[int]] = None
    problems: list[str] = field(default_factory=list)

    @property
    def hypothesis_holds(self) -> bool:
        return self.claw_free and (self.t17_holds or self.t18_holds)


def check_instance(index: int, g: Graph, k: int, node_limit: int = DEFAULT_NODE_LIMIT) -> InstanceOutcome:
    claw_free = is_claw_free(g)[0]
    t17 = check_hypothesis(g, "T1.7", k).holds
    t18 = check_hypothesis(g, "T1.8", k).holds
    rep = solve(g, k)
    ex = has_spanning_tree_with_budget(g, k, node_limit=node_limit)
    out = InstanceOutcome(
        index=index, n=g.n, m=g.m, k=k, claw_free=claw_free, t17_holds=t17, t18_holds=t18,
        proof_outcome=rep.outcome, proof_iterations=rep.iterations,
        exact_feasible=ex.feasible, exact_exhausted=ex.exhausted,
    )
    problems = out.problems
    if out.hypothesis_holds and rep.outcome != FEASIBLE:
        problems.append(f"hypothesis holds but proof-search returned {rep.outcome}")
    if out.hypothesis_holds and ex.feasible is False:
        problems.append("hypothesis holds but exact search found no spanning tree within budget")
    if rep.outcome == FEASIBLE:
        t = rep.tree
        if not t.is_spanning or t.profile.branch_count > k:
            problems.append("proof-search tree is not spanning within budget")
        if ex.feasible is False:
            problems.append("proof-search found a tree the exact search ruled out")
    if rep.outcome == CERTIFICATE:
        cert = rep.certificate
        out.certificate = list(cert.vertices)
        if not verify_certificate(g, cert, k).ok:
            problems.append("certificate fails verification")
        if cert.kind == "T1.7-witness":
            confirmed = sigma(g, 4, k + 3).value <= g.n - 2 * k - 6
        else:
            confirmed = sigma(g, 5, 2).value <= g.n - 3 * k - 7
        if not confirmed:
            problems.append("sigma does not confirm the certificate bound")
    if ex.tree is not None and (not ex.tree.is_spanning or ex.tree.profile.branch_count > k):
        problems.append("exact witness tree is not spanning within budget")
    return out


def _run(args):
    return check_instance(*args)


@dataclass
class ValidationSummary:
    seed: int
    count: int
    ks: list[int]
    order_min: int
    order_max: int
    outcomes: list[InstanceOutcome]

    @property
    def contradictions(self) -> list[InstanceOutcome]:
        return [o for o in self.outcomes if o.problems]

    @property
    def inconclusive(self) -> int:
        return sum(1 for o in self.outcomes if o.exact_feasible is None)

    def tally(self) -> dict[str, int]:
        c = Counter()
        for o in self.outcomes:
            c[f"hypothesis={'holds' if o.hypothesis_holds else 'fails'} proof={o.proof_outcome} "
              f"exact={ {True: 'feasible', False: 'infeasible', None: 'inconclusive'}[o.exact_feasible] }"] += 1
        return dict(sorted(c.items()))

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "k": self.ks,
            "order_range": [self.order_min, self.order_max],
            "instances_checked": len(self.outcomes),
            "tally": self.tally(),
            "inconclusive": self.inconclusive,
            "contradictions": [asdict(o) for o in self.contradictions],
        }


def validate(
    seed: int,
    count: int,
    ks: list[int],
    order_min: int = 3,
    order_max: int = 12,
    node_limit: int = DEFAULT_NODE_LIMIT,
    jobs: int = 1,
    family: str = "er",
) -> ValidationSummary:
    corpus = generate_clawfree_corpus(seed, count, order_min, order_max, family)
    tasks = [(i, g, k, node_limit) for i, g in enumerate(corpus) for k in ks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run, tasks, chunksize=16))
    else:
        outcomes = [_run(t) for t in tasks]
    return ValidationSummary(seed, count, list(ks), order_min, order_max, outcomes)
