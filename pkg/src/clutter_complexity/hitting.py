"""Exact minimum hitting sets over bitset families.

Every minimisation in this package has the same shape: a pool of
candidate items (vertices of an edge, or sets of a Set Cover instance)
and a list of *targets*, each a bitmask of the candidates that would
satisfy it.  A selection ``S`` is feasible iff ``S & t != 0`` for every
target ``t``.  This is Set Cover with the roles of sets and elements
transposed.

Ties among minimum selections are broken towards the smallest integer
value of the selection bitmask, so results are reproducible.

Two exact routes are provided and cross-checked in the test-suite:

* :func:`min_hitting_set_deepening` -- iterative deepening over subset
  size, enumerating each size class in increasing bitmask order;
* :func:`min_hitting_set_bnb` -- target-branching branch and bound with a
  greedy upper bound and a disjoint-target lower bound, followed by a
  canonicalisation pass that recovers the tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bits import iter_bits, popcount

DEEPENING_LIMIT = 20


class Infeasible(ValueError):
    """Some target cannot be hit by any candidate in the pool."""


@dataclass(frozen=True)
class HittingResult:
    selection: int
    size: int
    exact: bool


def reduce_targets(targets: Sequence[int], pool: int) -> list[int]:
    """Restrict to ``pool``, drop duplicates and supersets of other targets."""
    ts = sorted({t & pool for t in targets}, key=lambda t: (popcount(t), t))
    if ts and ts[0] == 0:
        raise Infeasible("a target has no candidate in the pool")
    kept: list[int] = []
    for t in ts:
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def _drop_twins(targets: Sequence[int], pool: int) -> int:
    """Pool without useless candidates and without higher-index twins.

    Candidates hitting exactly the same targets are interchangeable; the
    lowest index always wins the tie-break, so the others can go.
    """
    signature: dict[int, int] = {}
    keep = 0
    for c in iter_bits(pool):
        bit = 1 << c
        sig = 0
        for i, t in enumerate(targets):
            if t & bit:
                sig |= 1 << i
        if sig and sig not in signature:
            signature[sig] = c
            keep |= bit
    return keep


def greedy_hitting_set(targets: Sequence[int], pool: int) -> int:
    """Repeatedly take the candidate hitting most open targets (lowest on ties)."""
    open_ = [t & pool for t in targets]
    if any(t == 0 for t in open_):
        raise Infeasible("a target has no candidate in the pool")
    chosen = 0
    while open_:
        best, best_count = -1, -1
        for c in iter_bits(pool & ~chosen):
            bit = 1 << c
            cnt = sum(1 for t in open_ if t & bit)
            if cnt > best_count:
                best, best_count = c, cnt
        bit = 1 << best
        chosen |= bit
        open_ = [t for t in open_ if not t & bit]
    return chosen


def _disjoint_lower_bound(targets: Sequence[int]) -> int:
    used = 0
    count = 0
    for t in targets:  # already sorted by size
        if not t & used:
            used |= t
            count += 1
    return count


def _colex(items: list[int], k: int) -> Iterator[int]:
    """k-subsets of ``items`` (bit values, ascending) in increasing int order."""
    if k == 0:
        yield 0
        return
    for top in range(k - 1, len(items)):
        hi = items[top]
        for rest in _colex(items[:top], k - 1):
            yield rest | hi


def _feasible_within(targets: list[int], pool: int, forced: int, budget: int) -> Optional[int]:
    """Some selection ``forced | X`` with ``X ⊆ pool`` of size <= budget, or None."""
    open_ = [t for t in targets if not t & forced]
    extra = budget - popcount(forced)
    if extra < 0:
        return None
    return _search(open_, pool, extra, forced)


def _search(open_: list[int], pool: int, extra: int, chosen: int) -> Optional[int]:
    if not open_:
        return chosen
    if extra == 0:
        return None
    pick = None
    best = None
    for t in open_:
        r = t & pool
        if r == 0:
            return None
        c = popcount(r)
        if best is None or c < best:
            pick, best = r, c
            if c == 1:
                break
    # disjoint-target bound on the restricted family
    used = 0
    need = 0
    for t in sorted((t & pool for t in open_), key=popcount):
        if not t & used:
            used |= t
            need += 1
            if need > extra:
                return None
    remaining = pool
    for c in iter_bits(pick):
        bit = 1 << c
        rest = [t for t in open_ if not t & bit]
        found = _search(rest, remaining & ~bit, extra - 1, chosen | bit)
        if found is not None:
            return found
        remaining &= ~bit
    return None


def min_hitting_size(targets: Sequence[int], pool: int) -> int:
    """Size of a minimum hitting set (no tie-break work)."""
    ts = reduce_targets(targets, pool)
    if not ts:
        return 0
    pool = _drop_twins(ts, pool)
    upper = popcount(greedy_hitting_set(ts, pool))
    lower = _disjoint_lower_bound(ts)
    if lower == upper:
        return upper
    for k in range(lower, upper):
        if _search(ts, pool, k, 0) is not None:
            return k
    return upper


def has_hitting_set_of_size(targets: Sequence[int], pool: int, k: int) -> bool:
    ts = reduce_targets(targets, pool)
    if not ts:
        return k >= 0
    pool = _drop_twins(ts, pool)
    return _search(ts, pool, k, 0) is not None


def min_hitting_set_bnb(targets: Sequence[int], pool: int) -> HittingResult:
    ts = reduce_targets(targets, pool)
    if not ts:
        return HittingResult(0, 0, True)
    pool = _drop_twins(ts, pool)
    k = min_hitting_size(ts, pool)
    # canonicalise: from the highest candidate down, drop it if a size-k
    # selection survives without it.  The result is the minimum bitmask.
    forced = 0
    allowed = pool
    for c in sorted(iter_bits(pool), reverse=True):
        bit = 1 << c
        trial = allowed & ~bit
        if _feasible_within(ts, trial & ~forced, forced, k) is not None:
            allowed = trial
        else:
            forced |= bit
    # every candidate is now either excluded or forced, so ``forced`` is the cover
    assert popcount(forced) == k and all(t & forced for t in ts)
    return HittingResult(forced, k, True)


def min_hitting_set_deepening(targets: Sequence[int], pool: int) -> HittingResult:
    ts = reduce_targets(targets, pool)
    if not ts:
        return HittingResult(0, 0, True)
    pool = _drop_twins(ts, pool)
    items = [1 << c for c in iter_bits(pool)]
    for k in range(len(items) + 1):
        for sel in _colex(items, k):
            if all(t & sel for t in ts):
                return HittingResult(sel, k, True)
    raise Infeasible("no hitting set exists")  # unreachable after reduce_targets


def min_hitting_set(targets: Sequence[int], pool: int, method: str = "exact") -> HittingResult:
    if method == "greedy":
        ts = reduce_targets(targets, pool)
        sel = greedy_hitting_set(ts, pool) if ts else 0
        return HittingResult(sel, popcount(sel), False)
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    if popcount(pool) <= DEEPENING_LIMIT:
        return min_hitting_set_deepening(targets, pool)
    return min_hitting_set_bnb(targets, pool)


__all__ = [
    "HittingResult",
    "Infeasible",
    "greedy_hitting_set",
    "has_hitting_set_of_size",
    "min_hitting_set",
    "min_hitting_set_bnb",
    "min_hitting_set_deepening",
    "min_hitting_size",
    "reduce_targets",
]
