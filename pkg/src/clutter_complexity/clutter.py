"""Clutters, their recognizing sets and exact complexity values.

A clutter is a ground set ``0..n-1`` with an antichain of edges.  For an
edge ``e`` a subset ``s ⊆ e`` is *recognizing* when no other edge contains
``s``; ``c(e) = |S_e| / |e|`` for a smallest recognizing ``S_e`` and
``c(L)`` is the maximum over edges.  All values are :class:`Fraction`.

Clutters built from a graph (maximal independent sets, or maximal
matchings via the line graph) remember that graph.  For those the
recognizing condition is evaluated as domination -- every vertex outside
the edge needs a neighbour in the subset -- which avoids materialising
the other edges at all.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .bits import from_iter, iter_bits, popcount, to_list
from .config import BudgetExceeded, get_budget
from .graph import EdgeIndexMap, Graph, line_graph
from .hitting import min_hitting_set, min_hitting_size


class ClutterError(ValueError):
    pass


class EnumerationCapExceeded(BudgetExceeded):
    def __init__(self, cap: int, partial: int):
        super().__init__(f"enumeration cap {cap} exceeded after {partial} edges")
        self.cap = cap
        self.partial = partial


@dataclass(frozen=True)
class Clutter:
    n: int
    edges: tuple[int, ...]
    graph: Optional[Graph] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.edges)

    def edge_list(self, i: int) -> list[int]:
        return to_list(self.edges[i])

    def index(self, edge: int | Iterable[int]) -> int:
        mask = edge if isinstance(edge, int) else from_iter(edge)
        return self.edges.index(mask)

    @property
    def union(self) -> int:
        u = 0
        for e in self.edges:
            u |= e
        return u

    @property
    def intersection(self) -> int:
        if not self.edges:
            return 0
        x = self.edges[0]
        for e in self.edges[1:]:
            x &= e
        return x


def new_clutter(n: int, edges: Iterable[Iterable[int] | int], graph: Optional[Graph] = None) -> Clutter:
    masks = []
    for e in edges:
        mask = e if isinstance(e, int) else from_iter(e)
        if mask >> n:
            raise ClutterError(f"edge {to_list(mask)} has a member outside 0..{n - 1}")
        masks.append(mask)
    masks.sort()
    for a, b in zip(masks, masks[1:]):
        if a == b:
            raise ClutterError(f"duplicate edge {to_list(a)}")
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b == a or a & b == b:
                raise ClutterError(
                    f"antichain violated: {to_list(a)} and {to_list(b)} are nested"
                )
    return Clutter(n, tuple(masks), graph)


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def iter_maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Maximal independent sets of ``g`` as bitmasks (pivoting Bron-Kerbosch).

    Runs Bron-Kerbosch on the complement; order is search order, not
    canonical.
    """
    full = g.full
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p:
            if not x:
                yield r
            return
        px = p | x
        pivot, best = -1, -1
        for u in iter_bits(px):
            c = popcount(p & comp[u])
            if c > best:
                pivot, best = u, c
        for v in iter_bits(p & ~comp[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    yield from expand(0, full, 0)


def _collect(it: Iterator[int], cap: Optional[int]) -> list[int]:
    cap = get_budget().enum_cap if cap is None else cap
    out = []
    for e in it:
        out.append(e)
        if len(out) > cap:
            raise EnumerationCapExceeded(cap, len(out) - 1)
    out.sort()
    return out


def maximal_independent_sets(g: Graph, cap: Optional[int] = None) -> Clutter:
    return Clutter(g.n, tuple(_collect(iter_maximal_independent_sets(g), cap)), g)


def maximal_matchings(g: Graph, cap: Optional[int] = None) -> tuple[Clutter, EdgeIndexMap]:
    """Maximal matchings as sets of edge indices into the returned map."""
    lg, emap = line_graph(g)
    return maximal_independent_sets(lg, cap), emap


def extend_to_maximal_independent(g: Graph, s: int | Iterable[int]) -> int:
    mask = s if isinstance(s, int) else from_iter(s)
    if not g.is_independent(mask):
        raise ClutterError(f"{to_list(mask)} is not independent")
    blocked = mask
    for v in iter_bits(mask):
        blocked |= g.adj[v]
    for v in range(g.n):
        if not blocked >> v & 1:
            mask |= 1 << v
            blocked |= (1 << v) | g.adj[v]
    return mask


def derived_graph(l: Clutter) -> Graph:
    """``u ~ v`` iff no edge of ``l`` contains both."""
    together = [0] * l.n
    for e in l.edges:
        for v in iter_bits(e):
            together[v] |= e
    full = (1 << l.n) - 1
    return Graph(l.n, tuple(full & ~together[v] & ~(1 << v) for v in range(l.n)))


# --------------------------------------------------------------------------
# recognizing sets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RecognizingResult:
    edge_index: int
    min_set: int
    size: int
    complexity: Fraction
    exact: bool = True

    def to_dict(self, edge: int) -> dict:
        return {
            "edge": to_list(edge),
            "min_set": to_list(self.min_set),
            "size": self.size,
            "c": fmt_fraction(self.complexity),
            "exact": self.exact,
        }


def fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def ratio(size: int, edge_size: int) -> Fraction:
    return Fraction(size, edge_size) if edge_size else Fraction(0)


def generic_targets(l: Clutter, i: int) -> list[int]:
    e = l.edges[i]
    return [e & ~f for j, f in enumerate(l.edges) if j != i]


def domination_targets(g: Graph, u: int) -> list[int]:
    outside = g.full & ~u
    return [g.adj[w] & u for w in iter_bits(outside)]


def _targets(l: Clutter, i: int) -> list[int]:
    if l.graph is not None:
        return domination_targets(l.graph, l.edges[i])
    return generic_targets(l, i)


def is_recognizing_generic(l: Clutter, i: int, subset: int) -> bool:
    return all(f & subset != subset for j, f in enumerate(l.edges) if j != i)


def is_recognizing_domination(g: Graph, u: int, subset: int) -> bool:
    return all(g.adj[w] & subset for w in iter_bits(g.full & ~u))


def is_recognizing(l: Clutter, edge_index: int, subset: int | Iterable[int]) -> bool:
    mask = subset if isinstance(subset, int) else from_iter(subset)
    e = l.edges[edge_index]
    if mask & ~e:
        raise ClutterError(f"{to_list(mask)} is not inside edge {to_list(e)}")
    generic = is_recognizing_generic(l, edge_index, mask)
    if l.graph is not None:
        dom = is_recognizing_domination(l.graph, e, mask)
        if dom != generic:
            raise AssertionError(
                f"domination and containment disagree on {to_list(mask)} ⊆ {to_list(e)}"
            )
    return generic


def min_recognizing_set(l: Clutter, edge_index: int, method: str = "exact") -> RecognizingResult:
    if not 0 <= edge_index < len(l.edges):
        raise IndexError(f"edge index {edge_index} out of range")
    e = l.edges[edge_index]
    res = min_hitting_set(_targets(l, edge_index), e, method)
    return RecognizingResult(edge_index, res.selection, res.size, ratio(res.size, popcount(e)), res.exact)


def mis_edge_complexity(g: Graph, u: int) -> Fraction:
    """``c(U)`` for a maximal independent set ``U`` of ``g`` (size only)."""
    return ratio(min_hitting_size(domination_targets(g, u), u), popcount(u))


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

@dataclass
class ComplexityReport:
    clutter: Clutter
    per_edge: list[RecognizingResult]
    argmax: int
    c: Fraction
    elapsed: float = 0.0
    edge_labels: Optional[Sequence] = None  # e.g. vertex pairs for matchings

    @property
    def edge_count(self) -> int:
        return len(self.per_edge)

    def values(self) -> set[Fraction]:
        return {r.complexity for r in self.per_edge}

    def _label(self, mask: int):
        if self.edge_labels is None:
            return to_list(mask)
        return [list(self.edge_labels[i]) for i in iter_bits(mask)]

    def to_json(self) -> dict:
        # elapsed time is deliberately left out: reports must be byte-stable
        return {
            "edges": self.edge_count,
            "per_edge": [
                {
                    "edge": self._label(self.clutter.edges[r.edge_index]),
                    "min_set": self._label(r.min_set),
                    "c": fmt_fraction(r.complexity),
                }
                for r in self.per_edge
            ],
            "c": fmt_fraction(self.c),
            "argmax_edge": self.argmax,
        }


def clutter_complexity(l: Clutter, method: str = "exact") -> ComplexityReport:
    if not l.edges:
        raise ClutterError("complexity of a clutter with no edges is undefined")
    t0 = time.perf_counter()
    per_edge = [min_recognizing_set(l, i, method) for i in range(len(l.edges))]
    best = 0
    for i, r in enumerate(per_edge):
        if r.complexity > per_edge[best].complexity:
            best = i
    return ComplexityReport(l, per_edge, best, per_edge[best].complexity, time.perf_counter() - t0)


def graph_complexity(g: Graph, cap: Optional[int] = None) -> ComplexityReport:
    return clutter_complexity(maximal_independent_sets(g, cap))


def matching_complexity(g: Graph, cap: Optional[int] = None) -> ComplexityReport:
    if g.m == 0:
        raise ClutterError("matching complexity needs at least one edge")
    l, emap = maximal_matchings(g, cap)
    rep = clutter_complexity(l)
    rep.edge_labels = emap.pairs
    return rep


# --------------------------------------------------------------------------
# clutter text format: "n" then one edge per line
# --------------------------------------------------------------------------

def parse_clutter_text(text: str) -> Clutter:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ClutterError("empty clutter file")
    try:
        n = int(lines[0])
        edges = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ClutterError(f"malformed clutter file: {exc}") from None
    return new_clutter(n, edges)


def format_clutter_text(l: Clutter) -> str:
    return "\n".join([str(l.n)] + [" ".join(map(str, to_list(e))) for e in l.edges]) + "\n"
