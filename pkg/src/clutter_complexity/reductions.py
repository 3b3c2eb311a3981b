"""Set Cover and the two bipartite gadgets built from it.

Vertex layout of both gadgets: element vertices first, then one vertex per
set.  In the multiplied gadget element ``i`` has copies ``i*K .. i*K+K-1``
so that multiplicity 1 reproduces the plain gadget exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bits import from_iter, iter_bits, popcount, to_list
from .clutter import (
    fmt_fraction,
    is_recognizing_domination,
    iter_maximal_independent_sets,
    maximal_independent_sets,
    min_recognizing_set,
    mis_edge_complexity,
    clutter_complexity,
)
from .config import BudgetExceeded, get_budget
from .graph import Graph
from .hitting import min_hitting_set


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class SetCoverInstance:
    n: int
    subsets: tuple[int, ...]
    target: Optional[int] = None

    def __post_init__(self):
        if not self.subsets:
            raise InstanceError("an instance needs at least one set")
        full = (1 << self.n) - 1
        union = 0
        for s in self.subsets:
            if s & ~full:
                raise InstanceError(f"set {to_list(s)} has elements outside 0..{self.n - 1}")
            union |= s
        if union != full:
            missing = to_list(full & ~union)
            raise InstanceError(f"sets do not cover the universe; missing {missing}")

    @classmethod
    def from_lists(cls, n: int, subsets: Sequence[Sequence[int]], target: Optional[int] = None):
        return cls(n, tuple(from_iter(s) for s in subsets), target)

    @property
    def m(self) -> int:
        return len(self.subsets)

    def element_targets(self) -> list[int]:
        """Per element, the mask of set indices containing it."""
        out = []
        for a in range(self.n):
            out.append(sum(1 << j for j, s in enumerate(self.subsets) if s >> a & 1))
        return out

    def is_cover(self, indices: int) -> bool:
        u = 0
        for j in iter_bits(indices):
            u |= self.subsets[j]
        return u == (1 << self.n) - 1

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [" ".join(map(str, to_list(s))) for s in self.subsets]
        return "\n".join(lines) + "\n"


def parse_instance_text(text: str) -> SetCoverInstance:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    try:
        n, m = map(int, lines[0].split())
        sets = [[int(x) for x in ln.split()] for ln in lines[1:1 + m]]
    except (ValueError, IndexError) as exc:
        raise InstanceError(f"malformed instance: {exc}") from None
    if len(sets) != m:
        raise InstanceError(f"expected {m} set lines, got {len(sets)}")
    return SetCoverInstance.from_lists(n, sets)


def random_instance(rng: random.Random, n: int, m: int, p: float = 0.4) -> SetCoverInstance:
    sets = [from_iter(a for a in range(n) if rng.random() < p) for _ in range(m)]
    for a in range(n):  # patch uncovered elements into a random set
        if not any(s >> a & 1 for s in sets):
            j = rng.randrange(m)
            sets[j] |= 1 << a
    return SetCoverInstance(n, tuple(sets))


@dataclass(frozen=True)
class SetCoverResult:
    size: int
    cover: tuple[int, ...]
    exact: bool


def min_set_cover(inst: SetCoverInstance, method: str = "exact") -> SetCoverResult:
    res = min_hitting_set(inst.element_targets(), (1 << inst.m) - 1, method)
    return SetCoverResult(res.size, tuple(to_list(res.selection)), res.exact)


# --------------------------------------------------------------------------
# gadgets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    distinguished_mis: int
    legend: tuple[tuple, ...]  # ("copy", element, k) or ("set", j)
    multiplicity: Optional[int] = None

    def set_vertex(self, j: int) -> int:
        return self.legend.index(("set", j))

    def to_cover(self, mask: int) -> tuple[int, ...]:
        """Map a subset of set vertices back to set indices."""
        return tuple(self.legend[v][1] for v in iter_bits(mask))


def _gadget(inst: SetCoverInstance, k: int) -> ReductionOutput:
    n_vertices = inst.n * k + inst.m
    cap = get_budget().vertex_cap
    if n_vertices > cap:
        raise BudgetExceeded(f"gadget needs {n_vertices} vertices, cap is {cap}")
    legend = [("copy", i, c) for i in range(inst.n) for c in range(k)]
    legend += [("set", j) for j in range(inst.m)]
    edges = []
    for j, s in enumerate(inst.subsets):
        sv = inst.n * k + j
        for i in iter_bits(s):
            for c in range(k):
                edges.append((i * k + c, sv))
    g = Graph.from_edges(n_vertices, edges)
    dist = ((1 << inst.m) - 1) << (inst.n * k)
    return ReductionOutput(g, dist, tuple(legend), k)


def build_problem1_graph(inst: SetCoverInstance) -> ReductionOutput:
    out = _gadget(inst, 1)
    return ReductionOutput(out.graph, out.distinguished_mis, out.legend, None)


def build_problem2_graph(inst: SetCoverInstance, multiplicity: Optional[int] = None) -> ReductionOutput:
    k = (inst.n + inst.m) ** 2 if multiplicity is None else multiplicity
    if k < 1:
        raise InstanceError("multiplicity must be at least 1")
    return _gadget(inst, k)


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

@dataclass
class ReductionReport:
    which: str
    l_min: int
    m: int
    holds: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"which": self.which, "l_min": self.l_min, "m": self.m,
                "holds": self.holds, **self.details}


def verify_reduction(inst: SetCoverInstance, which: str = "problem1",
                     multiplicity: Optional[int] = None, max_sets: int = 16) -> ReductionReport:
    if inst.m > max_sets:
        raise BudgetExceeded(f"{inst.m} sets exceeds the exact-verification limit {max_sets}")
    cover = min_set_cover(inst)
    if which == "problem1":
        out = build_problem1_graph(inst)
        g, u = out.graph, out.distinguished_mis
        set_vertices = to_list(u)
        per_l = {}
        ok = True
        for l in range(0, inst.m + 1):
            rec = any(is_recognizing_domination(g, u, from_iter(c)) for c in combinations(set_vertices, l))
            cov = any(inst.is_cover(from_iter(c)) for c in combinations(range(inst.m), l))
            per_l[l] = [rec, cov]
            ok &= rec == cov
        clutter = maximal_independent_sets(g)
        rec_min = min_recognizing_set(clutter, clutter.index(u)).size
        ok &= rec_min == cover.size
        return ReductionReport("problem1", cover.size, inst.m, ok,
                               {"min_recognizing": rec_min, "per_l": per_l})
    if which == "problem2":
        out = build_problem2_graph(inst, multiplicity)
        clutter = maximal_independent_sets(out.graph)
        rep = clutter_complexity(clutter)
        expected = Fraction(cover.size, inst.m)
        di = clutter.index(out.distinguished_mis)
        dist_size = rep.per_edge[di].size
        others = [r.complexity for i, r in enumerate(rep.per_edge) if i != di]
        case2 = all(c < Fraction(1, inst.m) for c in others)
        ok = rep.c == expected and dist_size == cover.size
        return ReductionReport("problem2", cover.size, inst.m, ok, {
            "c": fmt_fraction(rep.c),
            "expected": fmt_fraction(expected),
            "distinguished_min_recognizing": dist_size,
            "case2_below_one_over_m": case2,
            "max_other": fmt_fraction(max(others)) if others else None,
            "multiplicity": out.multiplicity,
            "vertices": out.graph.n,
            "mis_count": len(clutter),
        })
    raise ValueError(f"unknown reduction {which!r}")


def gadget_mis_complexities(out: ReductionOutput) -> dict[int, Fraction]:
    """``c(U)`` for every maximal independent set of a gadget graph."""
    return {u: mis_edge_complexity(out.graph, u) for u in iter_maximal_independent_sets(out.graph)}
