import gzip
import itertools
import os
import random

import pytest

from clutter_complexity.bits import from_iter, popcount
from clutter_complexity.clutter import Clutter, is_recognizing_generic
from clutter_complexity.graph import Graph

DATA = os.path.join(os.path.dirname(__file__), "data")

ACCEPTANCE_LINES: list[str] = []


def census(name: str) -> list[str]:
    with gzip.open(os.path.join(DATA, name), "rt") as fh:
        return fh.read().split()


def connected_census(n: int) -> list[str]:
    return census(f"connected_n{n}.g6.gz")


def regular_census() -> list[str]:
    return census("connected_regular_n1-10.g6.gz")


def brute_min_recognizing(l: Clutter, i: int) -> tuple[int, int]:
    """(size, numerically smallest mask) of a minimum recognizing set by full subset search."""
    e = l.edges[i]
    members = [v for v in range(l.n) if e >> v & 1]
    for k in range(len(members) + 1):
        found = [from_iter(c) for c in itertools.combinations(members, k)
                 if is_recognizing_generic(l, i, from_iter(c))]
        if found:
            return k, min(found)
    raise AssertionError("the edge itself always recognizes")


def brute_mis(g: Graph) -> list[int]:
    out = []
    for mask in range(1 << g.n):
        if not g.is_independent(mask):
            continue
        if all(mask >> v & 1 or g.adj[v] & mask for v in range(g.n)):
            out.append(mask)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_antichain(rng: random.Random, n: int, k: int, p: float = 0.5) -> list[int]:
    """Up to ``k`` random pairwise incomparable nonempty subsets of ``0..n-1``."""
    edges: list[int] = []
    for _ in range(40 * k):
        if len(edges) == k:
            break
        e = from_iter(v for v in range(n) if rng.random() < p)
        if e and all(e & f not in (e, f) for f in edges):
            edges.append(e)
    return edges


@pytest.fixture
def acceptance():
    def record(number: int, passed: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
