"""Undirected simple graphs stored as per-vertex neighbour bitsets.

Vertices are ``0..n-1``; ``adj[v]`` is an ``int`` whose bit ``u`` is set
iff ``u`` and ``v`` are adjacent.  Graphs are immutable and hashable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .bits import from_iter, iter_bits, popcount
from .config import BudgetExceeded, get_budget

GRAPH6_MAX_N = 62


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """A text encoding could not be parsed; ``offset`` is the failing byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        cap = get_budget().vertex_cap
        if self.n > cap:
            raise BudgetExceeded(f"graph has {self.n} vertices, cap is {cap}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop edge ({u}, {v})")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def is_independent(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class EdgeIndexMap:
    """Line-graph vertex ``i`` is the original edge ``pairs[i]``."""

    pairs: tuple[tuple[int, int], ...]

    def index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.pairs.index((u, v))

    def edges_of(self, mask: int) -> list[tuple[int, int]]:
        return [self.pairs[i] for i in iter_bits(mask)]


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 word (n <= 62)."""
    if text.endswith("\n"):
        text = text[:-1]
    if text.endswith("\r"):
        text = text[:-1]
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise GraphFormatError("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", i)
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise GraphFormatError(
            f"expected {need} data bytes for n={n}, got {len(body)}",
            min(len(text), 1 + need),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphFormatError("non-zero padding bits", len(text) - 1)
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError("graph6 short form supports at most 62 vertices")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line_number, graph | GraphFormatError)`` for a graph6 stream.

    Blank lines and ``#`` comments are skipped; parse errors are yielded, not
    raised, so a scan can continue past a bad line.
    """
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, parse_graph6(line)
        except GraphFormatError as exc:
            yield lineno, exc


# --------------------------------------------------------------------------
# edge-list text:  "n\nu v\nu v\n..."
# --------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list", 0)
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Accept either a single graph6 word or an edge list."""
    stripped = text.strip()
    if "\n" not in stripped and " " not in stripped and not stripped.isdigit():
        return parse_graph6(stripped)
    return parse_edge_list(text)


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """Side one is ``0..m-1``, side two is ``m..m+n-1``."""
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    return Graph(m + n, tuple([right] * m + [left] * n))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """Centre 0 joined to ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def generate(kind: str, *args) -> Graph:
    makers = {
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "cycle": cycle,
        "path": path,
        "star": star,
        "empty": empty,
        "from_edge_list": Graph.from_edges,
    }
    if kind not in makers:
        raise GraphError(f"unknown graph kind {kind!r}")
    for a in args:
        if isinstance(a, int) and a < 0:
            raise GraphError("sizes must be non-negative")
    return makers[kind](*args)


# --------------------------------------------------------------------------
# invariants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    min_degree: int
    is_connected: bool
    is_bipartite: bool
    is_regular: bool
    regularity: Optional[int]
    is_tree: bool
    diameter: Optional[int]
    is_complete: bool
    is_balanced_complete_bipartite: bool
    is_cycle: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for u in iter_bits(g.adj[v]):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Optional[list[int]]:
    """2-colouring (0/1 per vertex) or ``None`` if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in iter_bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    q.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def balanced_complete_bipartite_order(g: Graph) -> Optional[int]:
    """``k`` if ``g`` is K_{k,k} (k >= 1), else ``None``."""
    if g.n < 2 or g.n % 2:
        return None
    k = g.n // 2
    if g.m != k * k or any(g.degree(v) != k for v in range(g.n)):
        return None
    colour = bipartition(g)
    if colour is None or sum(colour) != k:
        return None
    return k


def graph_stats(g: Graph) -> GraphStats:
    degs = [g.degree(v) for v in range(g.n)]
    m = sum(degs) // 2
    connected = is_connected(g)
    regular = len(set(degs)) <= 1
    diameter = None
    if connected and g.n >= 1:
        diameter = max(max(d for d in bfs_distances(g, s)) for s in range(g.n))
    return GraphStats(
        n=g.n,
        m=m,
        max_degree=max(degs, default=0),
        min_degree=min(degs, default=0),
        is_connected=connected,
        is_bipartite=bipartition(g) is not None,
        is_regular=regular,
        regularity=degs[0] if regular and degs else (0 if regular else None),
        is_tree=connected and g.n >= 1 and m == g.n - 1,
        diameter=diameter,
        is_complete=m == g.n * (g.n - 1) // 2,
        is_balanced_complete_bipartite=balanced_complete_bipartite_order(g) is not None,
        is_cycle=connected and g.n >= 3 and all(d == 2 for d in degs),
    )


def line_graph(g: Graph) -> tuple[Graph, EdgeIndexMap]:
    pairs = tuple(g.edges())
    incident = [0] * g.n
    for i, (u, v) in enumerate(pairs):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(pairs))
    return Graph(len(pairs), adj), EdgeIndexMap(pairs)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def from_networkx(h) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))


def mask_of(vertices: Iterable[int]) -> int:
    return from_iter(vertices)
