"""Distance-constrained independence numbers and minimum degree sums.

``alpha(G, l)`` is the largest vertex set with pairwise distance at least
``l``; ``sigma(G, l, k)`` is the smallest degree sum over such sets of
exactly ``k`` vertices (infinite when no such set exists). Both are found by
exhaustive branch and bound over the "far apart" compatibility graph, with a
node budget that raises instead of approximating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, GraphInputError, is_claw_free, require_connected
from .tree import StemProfile

INFINITE = math.inf

DEFAULT_WORK_LIMIT = 5_000_000


class WorkLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DegreeSumResult:
    value: Union[int, float]
    witness_set: Optional[tuple[int, ...]]

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def far_masks(g: Graph, l: int) -> list[int]:
    """``far[v]`` has bit ``w`` set iff ``w != v`` and ``d(v, w) >= l``."""
    dist = g.distances
    out = []
    for v in range(g.n):
        mask = 0
        for w in range(g.n):
            if w != v and dist.at_least(v, w, l):
                mask |= 1 << w
        out.append(mask)
    return out


def _check_l(l: int) -> None:
    if l < 2:
        raise GraphInputError(f"distance parameter must be >= 2, got {l}")


def distance_independence_number(
    g: Graph, l: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> tuple[int, tuple[int, ...]]:
    """Return ``(alpha, witness)``; the witness is lexicographically smallest."""
    _check_l(l)
    require_connected(g)
    if g.n == 0:
        return 0, ()
    far = far_masks(g, l)
    best: list[tuple[int, ...]] = [()]
    work = [0]

    def grow(chosen: list[int], cand: int) -> None:
        work[0] += 1
        if work[0] > work_limit:
            raise WorkLimitExceeded(f"alpha search exceeded {work_limit} nodes")
        if len(chosen) > len(best[0]):
            best[0] = tuple(chosen)
        while cand:
            if len(chosen) + bin(cand).count("1") <= len(best[0]):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            grow(chosen, cand & far[v])
            chosen.pop()

    grow([], (1 << g.n) - 1)
    return len(best[0]), best[0]


def sigma(g: Graph, l: int, k: int, work_limit: int = DEFAULT_WORK_LIMIT) -> DegreeSumResult:
    """Minimum degree sum of ``k`` vertices pairwise at distance ``>= l``."""
    _check_l(l)
    if k < 1:
        raise GraphInputError(f"set size must be >= 1, got {k}")
    require_connected(g)
    deg = [len(a) for a in g.adj]
    far = far_masks(g, l)
    best_value: list[Union[int, float]] = [INFINITE]
    best_set: list[Optional[tuple[int, ...]]] = [None]
    work = [0]

    def lower_bound(cand: int, need: int) -> int:
        ds = sorted(deg[v] for v in _bits(cand))
        return sum(ds[:need])

    def grow(chosen: list[int], total: int, cand: int) -> None:
        work[0] += 1
        if work[0] > work_limit:
            raise WorkLimitExceeded(f"sigma search exceeded {work_limit} nodes")
        need = k - len(chosen)
        if need == 0:
            if total < best_value[0]:
                best_value[0] = total
                best_set[0] = tuple(chosen)
            return
        while cand:
            if bin(cand).count("1") < need:
                return
            if total + lower_bound(cand, need) >= best_value[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            grow(chosen, total + deg[v], cand & far[v])
            chosen.pop()

    grow([], 0, (1 << g.n) - 1)
    return DegreeSumResult(best_value[0], best_set[0])


@dataclass(frozen=True)
class _Theorem:
    invariant: str  # "sigma" or "alpha"
    l: int
    size: str  # expression in k for the set size
    relation: str  # ">=" or "<="
    claw_free: bool
    conclusion: str
    min_k: int = 0


def _size(expr: str, k: int) -> int:
    return {"k+3": k + 3, "k+1": k + 1, "2": 2, "3": 3, "4": 4}[expr]


THEOREMS: dict[str, _Theorem] = {
    "T1.7": _Theorem("sigma", 4, "k+3", ">=", True, "stem has at most k branch vertices"),
    "T1.8": _Theorem("sigma", 5, "2", ">=", True, "stem has at most k branch vertices"),
    "T1.9-a": _Theorem("sigma", 4, "4", ">=", True, "stem is a spider"),
    "T1.9-b": _Theorem("sigma", 5, "2", ">=", True, "stem is a spider"),
    "Yan-α": _Theorem("alpha", 4, "", "<=", False, "stem has at most k branch vertices"),
    "Yan-σ": _Theorem("sigma", 4, "k+3", ">=", False, "stem has at most k branch vertices"),
    "KTY": _Theorem("sigma", 2, "k+1", ">=", False, "stem has maximum degree at most k", 2),
    "TZ": _Theorem("sigma", 2, "3", ">=", False, "stem has at most k leaves", 2),
    "KY-σ": _Theorem("sigma", 2, "k+1", ">=", False, "stem has at most k leaves", 2),
    "KY-clawfree": _Theorem("sigma", 2, "k+1", ">=", True, "stem has at most k leaves", 2),
}

# ASCII spellings accepted on the command line.
THEOREM_ALIASES = {"Yan-alpha": "Yan-α", "Yan-sigma": "Yan-σ", "KY-sigma": "KY-σ"}


def _rhs(theorem_id: str, n: int, k: int) -> int:
    return {
        "T1.7": n - 2 * k - 5,
        "T1.8": n - 3 * k - 6,
        "T1.9-a": n - 7,
        "T1.9-b": n - 9,
        "Yan-α": k + 2,
        "Yan-σ": n - 2 * k - 3,
        "KTY": n - k - 1,
        "TZ": n - 2 * k + 1,
        "KY-σ": n - k - 1,
        "KY-clawfree": n - 2 * k - 1,
    }[theorem_id]


@dataclass(frozen=True)
class HypothesisVerdict:
    theorem_id: str
    k: int
    holds: bool
    lhs: Union[int, float]
    rhs: int
    relation: str
    invariant: str
    claw_free: bool
    requires_claw_free: bool
    conclusion: str
    witness: Optional[tuple[int, ...]] = field(default=None)

    @property
    def applicable(self) -> bool:
        """Hypothesis holds and the graph class matches the theorem."""
        return self.holds and (self.claw_free or not self.requires_claw_free)


def resolve_theorem(theorem_id: str) -> str:
    tid = THEOREM_ALIASES.get(theorem_id, theorem_id)
    if tid not in THEOREMS:
        raise GraphInputError(
            f"unknown theorem id {theorem_id!r}; expected one of {sorted(THEOREMS)}"
        )
    return tid


def check_hypothesis(
    g: Graph, theorem_id: str, k: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> HypothesisVerdict:
    tid = resolve_theorem(theorem_id)
    th = THEOREMS[tid]
    if tid.startswith("T1.9"):
        k = 1
    if k < th.min_k:
        raise GraphInputError(f"{tid} needs k >= {th.min_k}, got {k}")
    require_connected(g)
    claw_free = is_claw_free(g)[0]
    rhs = _rhs(tid, g.n, k)
    if th.invariant == "alpha":
        lhs, witness = distance_independence_number(g, th.l, work_limit)
        invariant = f"alpha^{th.l}"
    else:
        size = _size(th.size, k)
        res = sigma(g, th.l, size, work_limit)
        lhs, witness = res.value, res.witness_set
        invariant = f"sigma^{th.l}_{size}"
    holds = lhs >= rhs if th.relation == ">=" else lhs <= rhs
    return HypothesisVerdict(
        theorem_id=tid,
        k=k,
        holds=bool(holds),
        lhs=lhs,
        rhs=rhs,
        relation=th.relation,
        invariant=invariant,
        claw_free=claw_free,
        requires_claw_free=th.claw_free,
        conclusion=th.conclusion,
        witness=witness,
    )


def conclusion_satisfied(theorem_id: str, k: int, profile: StemProfile) -> bool:
    """Whether a (spanning) tree's stem meets the theorem's conclusion."""
    tid = resolve_theorem(theorem_id)
    if tid.startswith("T1.9"):
        return profile.is_spider_stem
    if tid == "KTY":
        return profile.stem_max_degree <= k
    if tid in ("TZ", "KY-σ", "KY-clawfree"):
        return len(profile.stem_leaves) <= k
    return profile.branch_count <= k
