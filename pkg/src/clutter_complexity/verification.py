"""Checkers for the inequalities and structural lemmas, plus batch scans.

Every verdict is decided in exact arithmetic.  Bounds of the form
``1/(t - 2*sqrt(s))`` are compared by squaring integers, never by
floating point.  A bound that does not apply to an input is reported as
``applicable=False``; such reports never count as violations.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Union

from .bits import from_iter, iter_bits, popcount, to_list
from .clutter import (
    Clutter,
    ClutterError,
    clutter_complexity,
    domination_targets,
    fmt_fraction,
    graph_complexity,
    iter_maximal_independent_sets,
    matching_complexity,
    maximal_independent_sets,
    maximal_matchings,
    min_recognizing_set,
    mis_edge_complexity,
)
from .config import BudgetExceeded
from .graph import (
    Graph,
    GraphFormatError,
    balanced_complete_bipartite_order,
    encode_graph6,
    graph_stats,
    is_connected,
    line_graph,
    parse_graph6,
)
from .hitting import min_hitting_size

GRAPH_BOUNDS = ("gallai", "degree", "main", "matching_lower",
                "regular_half", "regular_two_thirds", "regular_four")
CLUTTER_BOUNDS = ("addendum",)
LEMMAS = ("matching_structure", "minimum_matching", "perfect_matching_charact", "all_singletons")


# --------------------------------------------------------------------------
# exact comparison against 1 / (t - 2 sqrt(s))
# --------------------------------------------------------------------------

def compare_with_surd_bound(c: Fraction, t: int, s: int) -> int:
    """Sign of ``c - 1/(t - 2*sqrt(s))`` (assumes ``t > 2*sqrt(s)``, ``s >= 0``).

    With ``c = p/q``: ``c >= bound`` iff ``p*t - q >= 2*p*sqrt(s)``, decided
    by the sign of ``p*t - q`` and then by comparing squares.
    """
    p, q = c.numerator, c.denominator
    lhs = p * t - q
    rhs2 = 4 * p * p * s
    if lhs < 0:
        return -1
    sq = lhs * lhs
    return (sq > rhs2) - (sq < rhs2)


def surd_bound_float(t: int, s: int) -> float:
    """Only for display; verdicts never use it."""
    return 1.0 / (t - 2 * s ** 0.5)


# --------------------------------------------------------------------------
# bound reports
# --------------------------------------------------------------------------

@dataclass
class BoundReport:
    kind: str
    applicable: bool
    reason: str
    lhs: Optional[Fraction]
    rhs: str
    holds: Optional[bool]  # raw verdict of the inequality, even when inapplicable
    tight: Optional[bool]

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": None if self.lhs is None else fmt_fraction(self.lhs),
            "rhs": self.rhs,
            "holds": self.holds,
            "tight": self.tight,
        }


def _excluded_complete_bipartite(g: Graph) -> Optional[int]:
    k = balanced_complete_bipartite_order(g)
    return k if k in (2, 3, 4) else None


def _graph_bound(g: Graph, kind: str, c_indep: Optional[Fraction] = None,
                 c_match: Optional[Fraction] = None) -> BoundReport:
    st = graph_stats(g)
    n, delta = st.n, st.max_degree

    def indep() -> Fraction:
        return c_indep if c_indep is not None else graph_complexity(g).c

    def match() -> Fraction:
        return c_match if c_match is not None else matching_complexity(g).c

    if kind == "gallai":
        if n == 0:
            return BoundReport(kind, False, "empty graph", None, "|V|", None, None)
        min_u = min(popcount(u) for u in iter_maximal_independent_sets(g))
        lhs = Fraction(min_u + delta)
        return BoundReport(kind, True, "", lhs, f"|V| = {n}", lhs <= n, lhs == n)

    if kind == "degree":
        if st.m == 0:
            return BoundReport(kind, False, "graph has no edges", None, "", None, None)
        c = indep()
        bound = Fraction(1, n - delta)
        return BoundReport(kind, True, "", c, f"1/(|V|-Δ) = {fmt_fraction(bound)}", c >= bound, c == bound)

    if kind == "main":
        rhs = f"1/({n + 1} - 2*sqrt({n - 1}))" if n >= 1 else "undefined"
        reason = ""
        if not st.is_connected:
            reason = "graph is disconnected"
        elif n < 2:
            reason = "fewer than 2 vertices"
        elif _excluded_complete_bipartite(g):
            k = _excluded_complete_bipartite(g)
            reason = f"K_{{{k},{k}}} is a listed exception"
        if n < 2 or st.m == 0:
            return BoundReport(kind, False, reason or "graph has no edges", None, rhs, None, None)
        c = indep()
        sign = compare_with_surd_bound(c, n + 1, n - 1)
        return BoundReport(kind, not reason, reason, c, rhs, sign >= 0, sign == 0)

    if kind == "matching_lower":
        reason = ""
        if not st.is_connected:
            reason = "graph is disconnected"
        elif n <= 4:
            reason = "needs more than 4 vertices"
        if st.m == 0 or n <= 2:
            return BoundReport(kind, False, reason or "graph has no edges", None, "2/(|V|-2)", None, None)
        c = match()
        bound = Fraction(2, n - 2)
        return BoundReport(kind, not reason, reason, c, f"2/(|V|-2) = {fmt_fraction(bound)}",
                           c >= bound, c == bound)

    if kind in ("regular_half", "regular_two_thirds", "regular_four"):
        r = st.regularity if st.is_regular else None
        bound, strict, need = {
            "regular_half": (Fraction(1, 2), False, "r > 1"),
            "regular_two_thirds": (Fraction(2, 3), False, "r > 4"),
            "regular_four": (Fraction(3, 5), True, "r = 4"),
        }[kind]
        ok_r = r is not None and {"regular_half": r > 1, "regular_two_thirds": r > 4,
                                  "regular_four": r == 4}[kind]
        rhs = ("> " if strict else ">= ") + fmt_fraction(bound)
        if st.m == 0:
            return BoundReport(kind, False, "graph has no edges", None, rhs, None, None)
        c = match()
        reason = "" if ok_r else (f"not regular with {need}")
        holds = c > bound if strict else c >= bound
        return BoundReport(kind, ok_r, reason, c, rhs, holds, c == bound)

    raise ValueError(f"unknown bound kind {kind!r}")


def _clutter_bound(l: Clutter, kind: str) -> BoundReport:
    if kind != "addendum":
        raise ValueError(f"bound {kind!r} needs a graph")
    n, k = l.n, len(l.edges)
    rhs = f"1/({n + 1} - 2*sqrt({n - 1}))" if n >= 1 else "undefined"
    reasons = []
    if l.union != (1 << n) - 1:
        reasons.append("edges do not cover the ground set")
    if l.intersection:
        reasons.append("edges share a common vertex")
    if k == 0 or n % k == 0:
        reasons.append(f"k={k} divides n={n}")
    if k == 0 or n < 1:
        return BoundReport(kind, False, "; ".join(reasons), None, rhs, None, None)
    c = clutter_complexity(l).c
    sign = compare_with_surd_bound(c, n + 1, n - 1)
    return BoundReport(kind, not reasons, "; ".join(reasons), c, rhs, sign >= 0, sign == 0)


def check_bound(obj: Union[Graph, Clutter], kind: str) -> BoundReport:
    if isinstance(obj, Clutter):
        return _clutter_bound(obj, kind)
    if kind in CLUTTER_BOUNDS:
        # a graph stands for its clutter of maximal independent sets
        return _clutter_bound(maximal_independent_sets(obj), kind)
    return _graph_bound(obj, kind)


# --------------------------------------------------------------------------
# fast, early-exit decisions for scans
# --------------------------------------------------------------------------

def iter_mis_complexities(g: Graph) -> Iterator[Fraction]:
    for u in iter_maximal_independent_sets(g):
        yield mis_edge_complexity(g, u)


def iter_matching_complexities(g: Graph) -> Iterator[Fraction]:
    lg, _ = line_graph(g)
    return iter_mis_complexities(lg)


def decide_lower_bound(values: Iterable[Fraction], sign: Callable[[Fraction], int],
                       strict: bool = False) -> tuple[bool, bool]:
    """``(holds, tight)`` for ``max(values) >= bound`` (``>`` if strict).

    ``sign(c)`` is the sign of ``c - bound``.  Stops at the first value
    strictly above the bound, so a full pass only happens when the maximum
    sits at or below it.
    """
    saw_equal = False
    for c in values:
        s = sign(c)
        if s > 0:
            return True, False
        if s == 0:
            saw_equal = True
    return (False if strict else saw_equal), saw_equal


def fast_bound(g: Graph, kind: str) -> tuple[bool, bool, bool]:
    """``(applicable, holds, tight)`` without computing the full report."""
    st = graph_stats(g)
    n = st.n
    if kind == "main":
        if n < 2 or st.m == 0:
            return False, True, False
        applicable = st.is_connected and not _excluded_complete_bipartite(g)
        holds, tight = decide_lower_bound(iter_mis_complexities(g),
                                          lambda c: compare_with_surd_bound(c, n + 1, n - 1))
        return applicable, holds, tight
    if kind == "matching_lower":
        if st.m == 0 or n <= 2:
            return False, True, False
        bound = Fraction(2, n - 2)
        applicable = st.is_connected and n > 4
        holds, tight = decide_lower_bound(iter_matching_complexities(g),
                                          lambda c: (c > bound) - (c < bound))
        return applicable, holds, tight
    if kind == "degree":
        if st.m == 0:
            return False, True, False
        bound = Fraction(1, n - st.max_degree)
        holds, tight = decide_lower_bound(iter_mis_complexities(g), lambda c: (c > bound) - (c < bound))
        return True, holds, tight
    rep = check_bound(g, kind)
    return rep.applicable, rep.holds is not False, bool(rep.tight)


def exact_matching_complexity_early(g: Graph) -> Fraction:
    """Exact ``c`` of the matching clutter, stopping as soon as 1 is seen."""
    best = Fraction(0)
    for c in iter_matching_complexities(g):
        if c > best:
            best = c
            if best == 1:
                break
    return best


# --------------------------------------------------------------------------
# lemma checks
# --------------------------------------------------------------------------

@dataclass
class LemmaReport:
    kind: str
    premise_holds: bool
    conclusions: list[dict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.premise_holds or all(c["passed"] for c in self.conclusions)

    def to_json(self) -> dict:
        return {"kind": self.kind, "premise_holds": self.premise_holds, "passed": self.passed,
                "conclusions": self.conclusions, "data": self.data}


def _conclusion(name: str, witnesses: list) -> dict:
    return {"name": name, "passed": not witnesses, "witnesses": witnesses}


def _matching_clutter_data(g: Graph):
    l, emap = maximal_matchings(g)
    pairs = emap.pairs

    def cover(mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            u, v = pairs[i]
            out |= (1 << u) | (1 << v)
        return out

    return l, pairs, cover


def _lemma_matching_structure(g: Graph) -> LemmaReport:
    rep = LemmaReport("matching_structure", g.m > 0)
    if not rep.premise_holds:
        return rep
    l, pairs, cover = _matching_clutter_data(g)
    w1, w2 = [], []
    for i, h in enumerate(l.edges):
        s = min_recognizing_set(l, i).min_set
        vs = cover(s)
        for j in iter_bits(h & ~s):
            a, b = pairs[j]
            own = (1 << a) | (1 << b)
            for x in (a, b):
                if g.adj[x] & ~(vs | own):
                    w1.append({"matching": [list(pairs[k]) for k in iter_bits(h)], "vertex": x})
        for j in iter_bits(s):
            a, b = pairs[j]
            if not ((g.adj[a] | g.adj[b]) & ~vs):
                w2.append({"matching": [list(pairs[k]) for k in iter_bits(h)], "edge": [a, b]})
    rep.conclusions = [_conclusion("non-recognizing edges only see V(S_H)", w1),
                       _conclusion("every S_H edge sees outside V(S_H)", w2)]
    rep.data = {"matchings": len(l)}
    return rep


def _lemma_minimum_matching(g: Graph) -> LemmaReport:
    rep = LemmaReport("minimum_matching", g.m > 0)
    if not rep.premise_holds:
        return rep
    l, pairs, cover = _matching_clutter_data(g)
    smallest = min(popcount(h) for h in l.edges)
    witnesses = []
    for i, h in enumerate(l.edges):
        if popcount(h) != smallest:
            continue
        s = min_recognizing_set(l, i).min_set
        rest = [pairs[j] for j in iter_bits(h & ~s)]
        for j in iter_bits(h):
            u, v = pairs[j]
            fu = {f for f in rest if f != (u, v) and g.adj[u] & ((1 << f[0]) | (1 << f[1]))}
            fv = {f for f in rest if f != (u, v) and g.adj[v] & ((1 << f[0]) | (1 << f[1]))}
            if any(a != b for a in fu for b in fv):
                witnesses.append({"matching": [list(pairs[k]) for k in iter_bits(h)], "edge": [u, v]})
    rep.conclusions = [_conclusion("endpoints never reach two different H\\S_H edges", witnesses)]
    rep.data = {"minimum_size": smallest}
    return rep


def complete_or_balanced_bipartite(g: Graph) -> Optional[str]:
    """``"K_2n"``/``"K_n,n"`` shape name if ``g`` has one, else ``None``."""
    st = graph_stats(g)
    if st.n >= 2 and st.n % 2 == 0 and st.is_complete:
        return f"K_{st.n}"
    k = balanced_complete_bipartite_order(g)
    if k is not None:
        return f"K_{k},{k}"
    return None


def _lemma_perfect(g: Graph) -> LemmaReport:
    connected = is_connected(g) and g.m > 0
    all_perfect = False
    if connected:
        l, _, _ = _matching_clutter_data(g)
        all_perfect = g.n % 2 == 0 and all(popcount(h) == g.n // 2 for h in l.edges)
    shape = complete_or_balanced_bipartite(g) if connected else None
    rep = LemmaReport("perfect_matching_charact", connected and all_perfect)
    rep.conclusions = [_conclusion("graph is K_2n or K_n,n", [] if shape or not all_perfect else [g.n])]
    rep.data = {"all_maximal_matchings_perfect": all_perfect, "shape": shape,
                "converse_holds": shape is None or all_perfect}
    return rep


def _maximum_cliques(g: Graph) -> list[int]:
    cliques = list(iter_maximal_independent_sets(g.complement()))
    size = max(popcount(c) for c in cliques)
    return sorted(c for c in cliques if popcount(c) == size)


def _lemma_all_singletons(g: Graph) -> LemmaReport:
    rep = LemmaReport("all_singletons", False)
    if g.n == 0 or not is_connected(g):
        rep.data = {"reason": "graph is empty or disconnected"}
        return rep
    mis = maximal_independent_sets(g)
    results = [min_recognizing_set(mis, i) for i in range(len(mis))]
    rep.premise_holds = all(r.size == 1 for r in results)
    if not rep.premise_holds:
        return rep
    st = graph_stats(g)
    wa = []
    for i, r in enumerate(results):
        x = to_list(r.min_set)[0]
        if g.adj[x] != g.full & ~mis.edges[i]:
            wa.append({"U": mis.edge_list(i), "vertex": x})
    min_u = min(popcount(u) for u in mis.edges)
    wb = [] if min_u + st.max_degree == st.n else [{"min_U": min_u, "max_degree": st.max_degree}]
    # vertices lying in exactly one maximal independent set, by that set
    unique = []
    for i, u in enumerate(mis.edges):
        others = 0
        for j, f in enumerate(mis.edges):
            if j != i:
                others |= f
        unique.append(u & ~others)
    wc = []
    if any(c == 0 for c in unique):
        wc.append({"empty_class": [mis.edge_list(i) for i, c in enumerate(unique) if c == 0]})
    for i, j in combinations(range(len(unique)), 2):
        for x in iter_bits(unique[i]):
            if unique[j] & ~g.adj[x]:
                wc.append({"non_adjacent": [x, to_list(unique[j] & ~g.adj[x])[0]]})
    maxcl = _maximum_cliques(g)
    if popcount(maxcl[0]) != len(mis):
        wc.append({"clique_number": popcount(maxcl[0]), "mis_count": len(mis)})
    for q in maxcl:
        if any(popcount(q & c) != 1 for c in unique):
            wc.append({"maximum_clique_not_transversal": to_list(q)})
    wd = [] if st.diameter is not None and st.diameter <= 3 else [{"diameter": st.diameter}]
    rep.conclusions = [
        _conclusion("(a) recognizing vertex sees everything outside U", wa),
        _conclusion("(b) min|U| + Δ = |V|", wb),
        _conclusion("(c) unique-membership transversals are the maximum cliques", wc),
        _conclusion("(d) diameter <= 3", wd),
    ]
    rep.data = {"classes": [to_list(c) for c in unique],
                "maximum_cliques": [to_list(q) for q in maxcl]}
    return rep


def check_lemma(g: Graph, kind: str) -> LemmaReport:
    fns = {
        "matching_structure": _lemma_matching_structure,
        "minimum_matching": _lemma_minimum_matching,
        "perfect_matching_charact": _lemma_perfect,
        "all_singletons": _lemma_all_singletons,
    }
    if kind not in fns:
        raise ValueError(f"unknown lemma kind {kind!r}")
    return fns[kind](g)


# --------------------------------------------------------------------------
# scans
# --------------------------------------------------------------------------

@dataclass
class ScanReport:
    scanned: int = 0
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    def bump(self, key: str) -> None:
        self.tallies[key] = self.tallies.get(key, 0) + 1

    def to_json(self) -> dict:
        return {"scanned": self.scanned, "tallies": dict(sorted(self.tallies.items())),
                "counterexamples": self.counterexamples, "notes": self.notes}


def conjecture_class(g: Graph) -> Optional[str]:
    """Name of the conjectured exception ``g`` belongs to, if any."""
    st = graph_stats(g)
    if st.is_cycle and st.n == 7:
        return "C_7"
    if st.is_complete and st.n >= 4 and st.n % 2 == 0:
        return "K_2n"
    k = balanced_complete_bipartite_order(g)
    if k is not None and k >= 2:
        return "K_n,n"
    return None


def classify_for_conjecture(code: str) -> dict:
    """Scan record for one graph6 word (top-level so worker pools can pickle it)."""
    try:
        g = parse_graph6(code)
    except GraphFormatError as exc:
        return {"graph6": code, "status": "parse_error", "error": str(exc)}
    st = graph_stats(g)
    if not st.is_connected:
        return {"graph6": code, "status": "skipped:disconnected"}
    if not st.is_regular:
        return {"graph6": code, "status": "skipped:not_regular"}
    if st.regularity is None or st.regularity < 2:
        return {"graph6": code, "status": "skipped:degenerate"}
    c = exact_matching_complexity_early(g)
    rec = {"graph6": code, "r": st.regularity, "n": st.n, "c": fmt_fraction(c)}
    if c == 1:
        rec["status"] = "hard"
    else:
        cls = conjecture_class(g)
        rec["status"] = f"exception:{cls}" if cls else "counterexample"
    return rec


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return map(fn, items)
    import multiprocessing as mp

    pool = mp.Pool(jobs)
    return pool.imap(fn, items, chunksize=64)


def conjecture_scan(codes: Iterable[str], jobs: int = 1) -> ScanReport:
    t0 = time.perf_counter()
    rep = ScanReport()
    exceptions = []
    for rec in _map(classify_for_conjecture, (c.strip() for c in codes if c.strip()), jobs):
        rep.scanned += 1
        rep.bump(rec["status"])
        if rec["status"] == "counterexample":
            rep.counterexamples.append(rec["graph6"])
        elif rec["status"].startswith("exception"):
            exceptions.append({k: rec[k] for k in ("graph6", "status", "c", "n", "r")})
        elif rec["status"] == "parse_error":
            rep.notes.append(rec["error"])
    rep.notes.extend(exceptions)
    rep.elapsed = time.perf_counter() - t0
    return rep


def labeled_regular_graphs(n: int, r: int) -> Iterator[Graph]:
    """Every labeled ``r``-regular graph on ``n`` vertices (no isomorphism reduction)."""
    if r >= n and n > 0 or (n * r) % 2:
        return
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # last pair index touching each vertex, for degree pruning
    last = [0] * n
    for k, (i, j) in enumerate(pairs):
        last[i] = last[j] = k
    deg = [0] * n
    adj = [0] * n

    def rec(k: int) -> Iterator[Graph]:
        if k == len(pairs):
            yield Graph(n, tuple(adj))
            return
        i, j = pairs[k]
        if deg[i] < r and deg[j] < r:
            deg[i] += 1; deg[j] += 1
            adj[i] |= 1 << j; adj[j] |= 1 << i
            if not ((last[i] == k and deg[i] != r) or (last[j] == k and deg[j] != r)):
                yield from rec(k + 1)
            deg[i] -= 1; deg[j] -= 1
            adj[i] &= ~(1 << j); adj[j] &= ~(1 << i)
        if not ((last[i] == k and deg[i] != r) or (last[j] == k and deg[j] != r)):
            yield from rec(k + 1)

    if n == 0:
        return
    yield from rec(0)


def builtin_regular_codes(max_n: int = 7) -> Iterator[str]:
    """graph6 words of all labeled connected regular graphs with ``n <= max_n``."""
    if max_n > 7:
        raise BudgetExceeded("built-in enumeration stops at n = 7; supply a graph6 census")
    for n in range(1, max_n + 1):
        for r in range(0, n):
            for g in labeled_regular_graphs(n, r):
                if is_connected(g):
                    yield encode_graph6(g)


def bound_scan(codes: Iterable[str], kinds: Iterable[str]) -> ScanReport:
    """Tally each bound over a graph6 stream with early-exit decisions."""
    t0 = time.perf_counter()
    kinds = list(kinds)
    rep = ScanReport()
    tight: dict[str, dict[int, str]] = {k: {} for k in kinds}
    exceptions: dict[str, list] = {k: [] for k in kinds}
    for code in codes:
        code = code.strip()
        if not code:
            continue
        try:
            g = parse_graph6(code)
        except GraphFormatError as exc:
            rep.bump("parse_error")
            rep.notes.append(str(exc))
            continue
        rep.scanned += 1
        for kind in kinds:
            applicable, holds, is_tight = fast_bound(g, kind)
            if not applicable:
                rep.bump(f"{kind}:inapplicable")
                if not holds:
                    exceptions[kind].append(code)
                continue
            rep.bump(f"{kind}:{'holds' if holds else 'violated'}")
            if not holds:
                rep.counterexamples.append({"kind": kind, "graph6": code})
            if is_tight:
                rep.bump(f"{kind}:tight")
                tight[kind].setdefault(g.n, code)
    for kind in kinds:
        rep.notes.append({"kind": kind, "first_tight_by_order": tight[kind],
                          "inapplicable_below_bound": exceptions[kind]})
    rep.elapsed = time.perf_counter() - t0
    return rep


# --------------------------------------------------------------------------
# aggregate report
# --------------------------------------------------------------------------

def full_report(g: Graph) -> dict:
    stage = "graph_stats"
    try:
        st = graph_stats(g)
        stage = "independent_complexity"
        ci = graph_complexity(g)
        stage = "matching_complexity"
        cm = matching_complexity(g) if g.m else None
        bounds = []
        for kind in GRAPH_BOUNDS:
            stage = f"bound:{kind}"
            bounds.append(_graph_bound(g, kind, ci.c, cm.c if cm else None).to_json())
        stage = "bound:addendum"
        bounds.append(_clutter_bound(ci.clutter, "addendum").to_json())
        lemmas = []
        for kind in LEMMAS:
            stage = f"lemma:{kind}"
            lemmas.append(check_lemma(g, kind).to_json())
    except BudgetExceeded as exc:
        raise BudgetExceeded(f"stage {stage}: {exc}") from exc
    return {
        "graph6": encode_graph6(g) if g.n <= 62 else None,
        "stats": st.to_dict(),
        "c_independent": fmt_fraction(ci.c),
        "c_matching": fmt_fraction(cm.c) if cm else None,
        "independent": ci.to_json(),
        "matching": cm.to_json() if cm else None,
        "bounds": bounds,
        "lemmas": lemmas,
    }
