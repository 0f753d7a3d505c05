"""Random connected claw-free graphs, as line graphs of random connected graphs."""

from __future__ import annotations

import math
import random
from itertools import combinations

from .graph import Graph, GraphInputError, is_connected, line_graph

MAX_CORPUS_ORDER = 40
_MAX_TRIES = 10_000


def _random_connected_base(rng: random.Random, edges_target: int, lo: int, hi: int) -> Graph:
    # fewest vertices that can carry the target edge count, most that keep it connected
    nmin = max(2, math.ceil((1 + math.sqrt(1 + 8 * edges_target)) / 2))
    nmax = edges_target + 1
    for _ in range(_MAX_TRIES):
        nb = rng.randint(nmin, nmax)
        pairs = list(combinations(range(nb), 2))
        p = edges_target / len(pairs)
        edges = [e for e in pairs if rng.random() < p]
        if not lo <= len(edges) <= hi:
            continue
        g = Graph(nb, edges)
        if is_connected(g):
            return g
    raise GraphInputError(f"could not sample a connected base graph with {edges_target} edges")


def _random_sparse_base(rng: random.Random, edges_target: int, max_chords: int = 3) -> Graph:
    chords = rng.randint(0, min(max_chords, max(0, edges_target - 2)))
    nb = edges_target + 1 - chords
    while chords and nb * (nb - 1) // 2 < edges_target:
        chords -= 1
        nb += 1
    edges = {(rng.randrange(v), v) for v in range(1, nb)}
    while len(edges) < edges_target:
        a, b = sorted(rng.sample(range(nb), 2))
        edges.add((a, b))
    return Graph(nb, edges)


def generate_clawfree_corpus(
    seed: int, count: int, order_min: int, order_max: int, family: str = "er"
) -> list[Graph]:
    """``count`` line graphs whose orders lie in ``[order_min, order_max]``.

    The base graph's edge count is the line graph's order. With
    ``family="er"`` bases are Erdős–Rényi samples with edge probability tuned
    to that count, resampled until connected. ``family="tree"`` uses a random
    recursive tree plus at most three chords, which gives long, sparse line
    graphs where the degree-sum hypotheses can fail. Output depends only on
    the arguments.
    """
    if family not in ("er", "tree"):
        raise GraphInputError(f"unknown corpus family {family!r}")
    if count < 0:
        raise GraphInputError("count must be non-negative")
    if not (1 <= order_min <= order_max <= MAX_CORPUS_ORDER):
        raise GraphInputError(
            f"order range [{order_min}, {order_max}] must lie within [1, {MAX_CORPUS_ORDER}]"
        )
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        target = rng.randint(order_min, order_max)
        if family == "er":
            base = _random_connected_base(rng, target, order_min, order_max)
        else:
            base = _random_sparse_base(rng, target)
        out.append(line_graph(base))
    return out
