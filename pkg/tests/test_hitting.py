import itertools

import pytest
from hypothesis import given, settings, strategies as st

from clutter_complexity.bits import from_iter, popcount
from clutter_complexity.hitting import (
    Infeasible,
    greedy_hitting_set,
    has_hitting_set_of_size,
    min_hitting_set,
    min_hitting_set_bnb,
    min_hitting_set_deepening,
    min_hitting_size,
)


def brute(targets, pool):
    items = [v for v in range(pool.bit_length()) if pool >> v & 1]
    for k in range(len(items) + 1):
        hits = [from_iter(c) for c in itertools.combinations(items, k)
                if all(t & from_iter(c) for t in targets)]
        if hits:
            return k, min(hits)
    return None


@st.composite
def instances(draw, max_pool=11):
    width = draw(st.integers(1, max_pool))
    pool = draw(st.integers(1, (1 << width) - 1))
    targets = draw(st.lists(st.integers(1, (1 << width) - 1), max_size=14))
    targets = [t for t in targets if t & pool]
    return targets, pool


@settings(derandomize=True, max_examples=300)
@given(instances())
def test_exact_routes_agree_with_brute_force(inst):
    targets, pool = inst
    size, best = brute(targets, pool)
    for fn in (min_hitting_set_bnb, min_hitting_set_deepening):
        res = fn(targets, pool)
        assert (res.size, res.selection) == (size, best)
    assert min_hitting_size(targets, pool) == size
    assert has_hitting_set_of_size(targets, pool, size)
    assert size == 0 or not has_hitting_set_of_size(targets, pool, size - 1)


@settings(derandomize=True, max_examples=100)
@given(instances())
def test_greedy_is_feasible_upper_bound(inst):
    targets, pool = inst
    sel = greedy_hitting_set(targets, pool)
    assert sel & ~pool == 0 and all(t & sel for t in targets)
    assert popcount(sel) >= min_hitting_size(targets, pool)
    res = min_hitting_set(targets, pool, "greedy")
    assert not res.exact


def test_no_targets():
    assert min_hitting_set([], 0b111).selection == 0


def test_infeasible():
    with pytest.raises(Infeasible):
        min_hitting_set([0b100], 0b011)


def test_large_pool_uses_branch_and_bound():
    # 30 candidates, 15 disjoint pairs: answer picks the low bit of each pair
    targets = [0b11 << (2 * i) for i in range(15)]
    res = min_hitting_set(targets, (1 << 30) - 1)
    assert res.size == 15 and res.selection == sum(1 << (2 * i) for i in range(15))
