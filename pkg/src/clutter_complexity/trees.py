"""Vertex types of trees and complexity-one maximal independent sets.

The labeling is a staged fixed point:

* step 0 marks every vertex at distance two from a leaf as *alpha*;
* each later step marks as *beta* every vertex ``t`` next to an alpha
  vertex whose other neighbours are all alpha or (previously) gamma, and
  as *gamma* every neighbour of a beta vertex;
* once nothing changes, *delta* marks every vertex whose neighbours are
  all alpha or gamma.  A delta vertex that is not beta is *pure*.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .bits import iter_bits, popcount, to_list
from .clutter import (
    ClutterError,
    is_recognizing_domination,
    iter_maximal_independent_sets,
    mis_edge_complexity,
)
from .graph import Graph, bfs_distances, is_tree

LABELS = ("alpha", "beta", "gamma", "delta")


class NotATreeError(ValueError):
    pass


class ConstructionPreconditionError(ValueError):
    pass


class CertificateFailure(RuntimeError):
    """The construction finished but its output does not have complexity one.

    Raised only on inputs that satisfy the construction's preconditions, so
    it signals a gap in the construction itself, not bad input.
    """

    def __init__(self, message: str, trace: "ConstructionTrace"):
        super().__init__(message)
        self.trace = trace


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")


@dataclass(frozen=True)
class TreeLabeling:
    n: int
    alpha: int
    beta: int
    gamma: int
    delta: int
    steps: tuple[dict, ...]  # per vertex: label -> step it was assigned
    passes: int
    history: tuple[int, ...] = ()  # labeled-vertex mask after each pass

    @property
    def pure_delta(self) -> int:
        return self.delta & ~self.beta

    def labels_of(self, v: int) -> list[str]:
        masks = (self.alpha, self.beta, self.gamma, self.delta)
        return [name for name, m in zip(LABELS, masks) if m >> v & 1]

    def to_json(self) -> list[dict]:
        out = []
        for v in range(self.n):
            st = self.steps[v]
            out.append({
                "vertex": v,
                "labels": self.labels_of(v),
                "step": min(st.values()) if st else None,
                "pure_delta": bool(self.pure_delta >> v & 1),
            })
        return out


def label_tree(t: Graph) -> TreeLabeling:
    _require_tree(t)
    n, adj = t.n, t.adj
    leaves = [v for v in range(n) if popcount(adj[v]) == 1]
    steps: list[dict] = [{} for _ in range(n)]

    alpha = 0
    for leaf in leaves:
        for v, d in enumerate(bfs_distances(t, leaf)):
            if d == 2:
                alpha |= 1 << v
    for v in iter_bits(alpha):
        steps[v]["alpha"] = 0

    beta = gamma = 0
    history = [alpha]
    k = 0
    while True:
        k += 1
        allowed = alpha | gamma  # labels known before this step
        new_beta = 0
        for v in range(n):
            if beta >> v & 1:
                continue
            for a in iter_bits(adj[v] & alpha):
                if adj[a] & ~(1 << v) & ~allowed == 0:
                    new_beta |= 1 << v
                    break
        beta_all = beta | new_beta
        new_gamma = 0
        for b in iter_bits(beta_all):
            new_gamma |= adj[b]
        new_gamma &= ~gamma
        if not new_beta and not new_gamma:
            break
        for v in iter_bits(new_beta):
            steps[v]["beta"] = k
        for v in iter_bits(new_gamma):
            steps[v]["gamma"] = k
        beta, gamma = beta_all, gamma | new_gamma
        history.append(alpha | beta | gamma)

    ag = alpha | gamma
    delta = 0
    for v in range(n):
        if adj[v] & ~ag == 0:
            delta |= 1 << v
            steps[v]["delta"] = k
    return TreeLabeling(n, alpha, beta, gamma, delta, tuple(steps), k, tuple(history))


# --------------------------------------------------------------------------
# necessary condition for c(T) = 1
# --------------------------------------------------------------------------

@dataclass
class NecessaryConditionReport:
    condition_a_holds: bool
    condition_b_holds: bool
    witnesses_a: list[int] = field(default_factory=list)
    witnesses_b: list[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.condition_a_holds and self.condition_b_holds

    def to_json(self) -> dict:
        return dict(self.__dict__)


def check_necessary_condition(t: Graph, labeling: Optional[TreeLabeling] = None) -> NecessaryConditionReport:
    lab = labeling or label_tree(t)
    ag = lab.alpha | lab.gamma
    bd = lab.beta | lab.delta
    wa = to_list(ag & bd)
    wb = []
    for v in iter_bits(lab.delta):
        ok = False
        for w in iter_bits(t.adj[v] & ag):
            if t.adj[w] & ~(1 << v) & bd == 0:
                ok = True
                break
        if not ok:
            wb.append(v)
    return NecessaryConditionReport(not wa, not wb, wa, wb)


def complexity_one_sets(t: Graph) -> list[int]:
    """All maximal independent sets ``U`` with ``c(U) = 1`` (sorted)."""
    return sorted(u for u in iter_maximal_independent_sets(t) if mis_edge_complexity(t, u) == 1)


def membership_rule_violations(t: Graph, labeling: Optional[TreeLabeling] = None) -> list[tuple[int, str, int]]:
    """``(U, rule, vertex)`` for every complexity-one ``U`` breaking a rule.

    Rules: alpha and gamma vertices lie outside ``U``; beta and delta
    vertices lie inside.
    """
    lab = labeling or label_tree(t)
    out = []
    for u in complexity_one_sets(t):
        for rule, mask, inside in (("alpha", lab.alpha, False), ("beta", lab.beta, True),
                                   ("gamma", lab.gamma, False), ("delta", lab.delta, True)):
            bad = mask & ~u if inside else mask & u
            out.extend((u, rule, v) for v in iter_bits(bad))
    return out


# --------------------------------------------------------------------------
# construction of a complexity-one set through a leaf
# --------------------------------------------------------------------------

@dataclass
class ConstructionTrace:
    u_set: int = 0
    spec: int = 0
    steps: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"U": to_list(self.u_set), "spec": to_list(self.spec), "steps": self.steps}


def verify_specific_certificate(g: Graph, u_set: int, spec: int) -> bool:
    """Every ``u`` in ``u_set`` has a neighbour in ``spec`` seeing no other ``U`` vertex."""
    if not g.is_independent(u_set) or not is_recognizing_domination(g, u_set, u_set):
        raise ClutterError(f"{to_list(u_set)} is not a maximal independent set")
    for u in iter_bits(u_set):
        if not any(g.adj[s] & u_set == 1 << u for s in iter_bits(g.adj[u] & spec)):
            return False
    return True


def _rooted(t: Graph, root: int) -> tuple[list[int], list[list[int]]]:
    parent = [-1] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    seen = 1 << root
    q = deque([root])
    while q:
        v = q.popleft()
        for c in iter_bits(t.adj[v] & ~seen):
            seen |= 1 << c
            parent[c] = v
            children[v].append(c)
            q.append(c)
    return parent, children


COMPLETIONS = frozenset({"alpha-groups", "pendant-spec"})


def construct_full_complexity_mis(t: Graph, leaf: int,
                                  completions: frozenset = COMPLETIONS) -> tuple[int, ConstructionTrace]:
    """Complexity-one maximal independent set containing ``leaf``.

    ``completions`` switches on two steps the prose algorithm leaves out;
    without them some precondition-satisfying trees end in a
    :class:`CertificateFailure`:

    * ``alpha-groups``: Case 1 also queues the children of alpha members
      of the group, not only of ``A`` minus ``A'``;
    * ``pendant-spec``: a childless vertex taken in Case 1 uses its parent
      as specific neighbour.
    """
    _require_tree(t)
    if not 0 <= leaf < t.n or t.degree(leaf) != 1:
        raise ConstructionPreconditionError(f"vertex {leaf} is not a leaf")
    lab = label_tree(t)
    if lab.beta:
        raise ConstructionPreconditionError(f"tree has beta vertices {to_list(lab.beta)}")
    if lab.pure_delta:
        raise ConstructionPreconditionError(f"tree has pure delta vertices {to_list(lab.pure_delta)}")

    alpha = lab.alpha
    parent, children = _rooted(t, leaf)

    def is_alpha(v: int) -> bool:
        return bool(alpha >> v & 1)

    def grandchildren(v: int) -> list[int]:
        return [g for c in children[v] for g in children[c]]

    trace = ConstructionTrace()
    u_set = 1 << leaf
    spec = t.adj[leaf]
    pending: deque[list[int]] = deque()
    for y in grandchildren(leaf):
        pending.append(children[y])

    while pending:
        group = pending.popleft()
        a = [v for v in group if not is_alpha(v)]
        a_prime = [v for v in a if all(is_alpha(c) for c in children[v])]
        step = {"B": group, "A": a, "A_prime": a_prime}
        trace.steps.append(step)
        if not a:
            step["case"] = "empty A"
            trace.u_set, trace.spec = u_set, spec
            raise CertificateFailure(f"no non-alpha vertex in group {group}", trace)
        if a_prime:
            step["case"] = "1"
            for z in a_prime:
                u_set |= 1 << z
                if children[z]:
                    for c in children[z]:
                        spec |= 1 << c
                elif "pendant-spec" in completions:
                    # pendant vertex: its parent is the specific neighbour
                    spec |= 1 << parent[z]
            for w in group:
                if w not in a_prime and ("alpha-groups" in completions or not is_alpha(w)):
                    pending.append(children[w])
            for z in a_prime:
                for g in grandchildren(z):
                    pending.append(children[g])
        else:
            w = min(a)
            step["case"] = "2"
            step["w"] = w
            u_set |= 1 << w
            spec |= 1 << parent[w]
            for y in group:
                if y != w:
                    pending.append(children[y])
            sub = []
            for z in grandchildren(w):
                b_i = children[z]
                if any(not is_alpha(v) for v in b_i):
                    sub.append((z, "2.1"))
                    pending.append(b_i)
                else:
                    sub.append((z, "2.2"))
                    u_set |= 1 << z
                    for v in b_i:
                        spec |= 1 << v
                    for g in grandchildren(z):
                        pending.append(children[g])
            step["subcases"] = sub

    trace.u_set, trace.spec = u_set, spec
    if not t.is_independent(u_set) or not is_recognizing_domination(t, u_set, u_set):
        raise CertificateFailure(f"{to_list(u_set)} is not a maximal independent set", trace)
    if not verify_specific_certificate(t, u_set, spec):
        raise CertificateFailure("specific-neighbour certificate failed", trace)
    if mis_edge_complexity(t, u_set) != 1:
        raise CertificateFailure("exact complexity of the constructed set is below one", trace)
    return u_set, trace
