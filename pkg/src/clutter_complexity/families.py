"""Extremal graph families and a search for graphs of prescribed complexity.

The drawings these families come from are not available, so each
generator is a reconstruction checked against the stated parameters by
exact computation in the test-suite before it is trusted at larger sizes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .clutter import Clutter, matching_complexity, maximal_independent_sets
from .graph import Graph, complete, complete_bipartite, cycle, is_connected, path
from .config import BudgetExceeded, get_budget


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]
    expected: Fraction
    formula: str


def _check_size(n: int) -> None:
    cap = get_budget().vertex_cap
    if n > cap:
        raise BudgetExceeded(f"family member needs {n} vertices, cap is {cap}")


def main_bound_extremal(n: int) -> Graph:
    """Apex ``0``, clique ``1..n`` and ``n-1`` private pendants per clique vertex.

    Pendants of clique vertex ``i`` are numbered consecutively after the
    clique.  ``|V| = n^2 + 1`` and ``Δ = 2n - 1``.
    """
    if n < 1:
        raise FamilyError("n must be at least 1")
    _check_size(n * n + 1)
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    nxt = n + 1
    for i in range(1, n + 1):
        for _ in range(n - 1):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(n * n + 1, edges)


def main_bound_spec(n: int) -> FamilySpec:
    return FamilySpec("main_bound_extremal", (n,), Fraction(1, n * n - 2 * n + 2), "1/(n^2-2n+2)")


def all_rationals_layout(m: int, n: int) -> dict[str, list[int]]:
    """Vertex numbering used by :func:`all_rationals_graph`."""
    k = n - m + 1
    a = [0]
    s = list(range(1, 1 + k))
    t = list(range(1 + k, 1 + 2 * k))
    x = list(range(1 + 2 * k, 2 * k + m))
    y = list(range(2 * k + m, 2 * k + 2 * m - 1))
    return {"a": a, "S": s, "T": t, "X": x, "Y": y}


def all_rationals_graph(m: int, n: int) -> Graph:
    """Connected bipartite graph with independent-set complexity ``m/n``.

    ``a`` is joined to all of ``S`` and ``X``; ``S`` and ``T`` (both of
    size ``n-m+1``) form a complete bipartite graph; each ``x_i`` carries a
    pendant ``y_i`` (``m-1`` of each).
    """
    if not 1 <= m <= n:
        raise FamilyError("need 1 <= m <= n")
    lay = all_rationals_layout(m, n)
    total = 1 + 2 * (n - m + 1) + 2 * (m - 1)
    _check_size(total)
    edges = [(0, s) for s in lay["S"]] + [(0, x) for x in lay["X"]]
    edges += [(s, t) for s in lay["S"] for t in lay["T"]]
    edges += list(zip(lay["X"], lay["Y"]))
    return Graph.from_edges(total, edges)


def all_rationals_spec(m: int, n: int) -> FamilySpec:
    return FamilySpec("all_rationals", (m, n), Fraction(m, n), "m/n")


def addendum_graph(k: int) -> Graph:
    """k-clique ``0..k-1``; clique vertex ``i`` owns pendants ``k+i(k-1) ..``."""
    if k < 2:
        raise FamilyError("k must be at least 2")
    n = k * k
    _check_size(n)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        for c in range(k - 1):
            edges.append((i, k + i * (k - 1) + c))
    return Graph.from_edges(n, edges)


def addendum_clutter(k: int) -> Clutter:
    """Maximal independent sets of :func:`addendum_graph` minus the pendant set."""
    g = addendum_graph(k)
    mis = maximal_independent_sets(g)
    pendants = g.full & ~((1 << k) - 1)
    return Clutter(g.n, tuple(e for e in mis.edges if e != pendants))


def addendum_spec(k: int) -> FamilySpec:
    n = k * k
    return FamilySpec("addendum_clutter", (k,), Fraction(1, n - k - n // k + 2), "1/(n-k-n/k+2)")


# --------------------------------------------------------------------------
# witness search for matching complexity
# --------------------------------------------------------------------------

def _partitions(total: int, parts: int, least: int = 1) -> Iterator[list[int]]:
    """Non-decreasing lists of ``parts`` integers >= least summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(least, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def spider(legs: list[int]) -> Graph:
    """Centre ``0`` with paths of the given lengths hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def broom(handle: int, bristles: int) -> Graph:
    """Path ``0..handle`` with ``bristles`` extra leaves on vertex ``handle``."""
    edges = [(i, i + 1) for i in range(handle)]
    edges += [(handle, handle + 1 + j) for j in range(bristles)]
    return Graph.from_edges(handle + 1 + bristles, edges)


def structured_candidates(n: int) -> Iterator[tuple[str, Graph]]:
    if n >= 2:
        yield f"path {n}", path(n)
    if n >= 3:
        yield f"cycle {n}", cycle(n)
    for legs in range(3, n):
        for p in _partitions(n - 1, legs):
            if max(p) > 1:  # plain stars are brooms with handle 1
                yield f"spider {p}", spider(p)
    for handle in range(1, n - 1):
        bristles = n - 1 - handle
        if bristles >= 2:
            yield f"broom {handle},{bristles}", broom(handle, bristles)
    if n >= 4:
        yield f"complete {n}", complete(n)
    for a in range(1, n // 2 + 1):
        if a >= 2 or n - a >= 2:
            yield f"complete_bipartite {a},{n - a}", complete_bipartite(a, n - a)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


@dataclass(frozen=True)
class Witness:
    graph: Graph
    label: str
    rank: int


def rational_witness_search(target: Fraction, max_vertices: int, random_trials: int = 200,
                            seed: int = 0, time_limit: Optional[float] = None) -> Optional[Witness]:
    """First connected graph (in a fixed search order) whose matching clutter
    has complexity exactly ``target``."""
    target = Fraction(target)
    if not 0 <= target <= 1:
        raise FamilyError("target must lie in [0, 1]")
    deadline = None if time_limit is None else time.monotonic() + time_limit
    rank = 0
    for n in range(2, max_vertices + 1):
        for label, g in structured_candidates(n):
            rank += 1
            if matching_complexity(g).c == target:
                return Witness(g, label, rank)
            if deadline is not None and time.monotonic() > deadline:
                return None
    rng = random.Random(seed)
    for trial in range(random_trials):
        n = rng.randint(2, max_vertices)
        g = random_connected_graph(rng, n, rng.uniform(0.2, 0.8))
        rank += 1
        if matching_complexity(g).c == target:
            return Witness(g, f"random #{trial} (seed {seed})", rank)
        if deadline is not None and time.monotonic() > deadline:
            return None
    return None
