import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clutter_complexity.bits import from_iter, to_list
from clutter_complexity.clutter import (
    ClutterError,
    EnumerationCapExceeded,
    clutter_complexity,
    derived_graph,
    extend_to_maximal_independent,
    format_clutter_text,
    graph_complexity,
    is_recognizing,
    matching_complexity,
    maximal_independent_sets,
    maximal_matchings,
    min_recognizing_set,
    new_clutter,
    parse_clutter_text,
)
from clutter_complexity.families import all_rationals_graph
from clutter_complexity.graph import Graph, complete, cycle, line_graph, path

from conftest import brute_min_recognizing, brute_mis, random_antichain, random_graph
from test_graph import graphs


def test_construction_examples():
    assert len(new_clutter(3, [[0], [1], [2]])) == 3
    with pytest.raises(ClutterError, match="antichain"):
        new_clutter(3, [[0], [0, 1]])
    with pytest.raises(ClutterError, match="duplicate"):
        new_clutter(3, [[0], [0]])
    assert new_clutter(2, [[0, 1]]).edges == (0b11,)


def test_mis_examples():
    assert maximal_independent_sets(cycle(4)).edges == (0b0101, 0b1010)
    assert maximal_independent_sets(complete(3)).edges == (1, 2, 4)
    assert [to_list(e) for e in maximal_independent_sets(path(3)).edges] == [[1], [0, 2]]


def test_matching_examples():
    l, emap = maximal_matchings(path(3))
    assert sorted(emap.edges_of(e) for e in l.edges) == [[(0, 1)], [(1, 2)]]
    assert len(maximal_matchings(complete(4))[0]) == 3
    l, emap = maximal_matchings(cycle(7))
    # brute force over every edge subset of C_7
    pairs = list(emap.pairs)
    brute = []
    for r in range(8):
        for sub in itertools.combinations(range(7), r):
            used = [v for i in sub for v in pairs[i]]
            if len(used) != len(set(used)):
                continue
            if all(set(pairs[j]) & set(used) for j in range(7) if j not in sub):
                brute.append(from_iter(sub))
    assert sorted(brute) == list(l.edges) and len(brute) == 7
    assert all(bin(e).count("1") == 3 for e in l.edges)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded) as info:
        maximal_independent_sets(cycle(12), cap=10)
    assert info.value.cap == 10 and info.value.partial == 10


def test_extend_examples():
    assert extend_to_maximal_independent(cycle(4), [0]) == 0b0101
    assert extend_to_maximal_independent(complete(3), [1]) == 0b010
    assert to_list(extend_to_maximal_independent(path(5), [])) == [0, 2, 4]
    with pytest.raises(ClutterError):
        extend_to_maximal_independent(path(3), [0, 1])


def test_recognizing_examples():
    c4 = maximal_independent_sets(cycle(4))
    assert is_recognizing(c4, c4.index([0, 2]), [0])
    single = new_clutter(2, [[0, 1]])
    assert is_recognizing(single, 0, [])
    k3 = maximal_independent_sets(complete(3))
    assert not is_recognizing(k3, 0, [])
    with pytest.raises(ClutterError):
        is_recognizing(c4, 0, [1])


def test_min_recognizing_examples():
    c4 = maximal_independent_sets(cycle(4))
    r = min_recognizing_set(c4, c4.index([0, 2]))
    assert to_list(r.min_set) == [0] and r.complexity == Fraction(1, 2)
    r = min_recognizing_set(new_clutter(2, [[0, 1]]), 0)
    assert r.min_set == 0 and r.complexity == 0
    r = min_recognizing_set(maximal_independent_sets(complete(3)), 0)
    assert to_list(r.min_set) == [0] and r.complexity == 1


def test_complexity_examples():
    assert clutter_complexity(maximal_independent_sets(cycle(4))).c == Fraction(1, 2)
    assert clutter_complexity(maximal_independent_sets(complete(3))).c == 1
    assert clutter_complexity(new_clutter(2, [[0, 1]])).c == 0
    with pytest.raises(ClutterError):
        clutter_complexity(new_clutter(3, []))
    for n in range(2, 7):
        assert graph_complexity(complete(n)).c == 1
    assert graph_complexity(path(4)).c == 1
    assert graph_complexity(all_rationals_graph(2, 3)).c == Fraction(2, 3)


def test_matching_complexity_examples():
    assert matching_complexity(complete(4)).c == Fraction(1, 2)
    assert matching_complexity(complete(6)).c == Fraction(2, 3)
    assert matching_complexity(cycle(7)).c == Fraction(2, 3)
    with pytest.raises(ClutterError):
        matching_complexity(Graph.from_edges(3, []))


def test_tie_break_lowest_index():
    rep = clutter_complexity(maximal_independent_sets(cycle(4)))
    assert rep.argmax == 0


def test_derived_graph_examples():
    assert derived_graph(new_clutter(2, [[0, 1]])).m == 0
    assert derived_graph(new_clutter(2, [[0], [1]])) == complete(2)


def test_clutter_text_roundtrip():
    l = new_clutter(4, [[0, 1], [1, 2], [3]])
    assert parse_clutter_text(format_clutter_text(l)) == l
    with pytest.raises(ClutterError):
        parse_clutter_text("3\n0 x\n")


def test_report_json_is_deterministic():
    a = json.dumps(matching_complexity(cycle(7)).to_json())
    b = json.dumps(matching_complexity(cycle(7)).to_json())
    assert a == b and '"c": "2/3"' in a


@settings(derandomize=True, max_examples=150)
@given(graphs(max_n=9))
def test_mis_enumeration_matches_brute_force(g):
    assert list(maximal_independent_sets(g).edges) == brute_mis(g)


@settings(derandomize=True, max_examples=150)
@given(graphs(max_n=6))
def test_derived_graph_recovers_graph(g):
    assert derived_graph(maximal_independent_sets(g)) == g


@settings(derandomize=True, max_examples=100)
@given(graphs(max_n=8))
def test_domination_and_containment_agree(g):
    l = maximal_independent_sets(g)
    for i, e in enumerate(l.edges):
        members = to_list(e)
        for k in range(len(members) + 1):
            for sub in itertools.combinations(members, k):
                is_recognizing(l, i, sub)  # raises if the two tests disagree


@settings(derandomize=True, max_examples=100)
@given(graphs(max_n=8))
def test_graph_clutter_matches_brute_force(g):
    l = maximal_independent_sets(g)
    for i in range(len(l)):
        r = min_recognizing_set(l, i)
        assert (r.size, r.min_set) == brute_min_recognizing(l, i)


def test_generic_clutters_match_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 9)
        edges = random_antichain(rng, n, rng.randint(1, 8))
        l = new_clutter(n, edges)
        for i in range(len(l)):
            r = min_recognizing_set(l, i)
            assert (r.size, r.min_set) == brute_min_recognizing(l, i)
            assert 0 <= r.complexity <= 1


def test_matching_equals_line_graph():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.2, 0.8))
        if g.m:
            assert matching_complexity(g).c == graph_complexity(line_graph(g)[0]).c
