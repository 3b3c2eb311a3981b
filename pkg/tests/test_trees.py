import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from clutter_complexity.bits import from_iter, to_list
from clutter_complexity.clutter import ClutterError, graph_complexity, mis_edge_complexity
from clutter_complexity.graph import Graph, cycle, from_networkx, path, star
from clutter_complexity.trees import (
    CertificateFailure,
    ConstructionPreconditionError,
    NotATreeError,
    check_necessary_condition,
    complexity_one_sets,
    construct_full_complexity_mis,
    label_tree,
    membership_rule_violations,
    verify_specific_certificate,
)


def labels(t):
    lab = label_tree(t)
    return tuple(to_list(m) for m in (lab.alpha, lab.beta, lab.gamma, lab.delta)), lab


def test_path4():
    (a, b, g, d), lab = labels(path(4))
    assert (a, b, g, d) == ([1, 2], [0, 3], [1, 2], [0, 3])
    assert lab.pure_delta == 0


def test_star3():
    (a, b, g, d), lab = labels(star(3))
    assert a == g == [1, 2, 3] and b == d == [0] and lab.pure_delta == 0


def test_path5():
    (a, b, g, d), _ = labels(path(5))
    assert (a, b, g, d) == ([2], [], [], [])


def test_not_a_tree():
    with pytest.raises(NotATreeError):
        label_tree(cycle(4))


def test_necessary_condition_examples():
    assert check_necessary_condition(path(4)).holds
    assert check_necessary_condition(path(2)).holds


def test_construction_examples():
    u, _ = construct_full_complexity_mis(path(2), 0)
    assert to_list(u) == [0]
    u, trace = construct_full_complexity_mis(path(5), 0)
    assert to_list(u) == [0, 3] and mis_edge_complexity(path(5), u) == 1
    with pytest.raises(ConstructionPreconditionError):
        construct_full_complexity_mis(star(3), 1)
    with pytest.raises(ConstructionPreconditionError):
        construct_full_complexity_mis(path(5), 2)


def test_certificate_examples():
    assert verify_specific_certificate(path(5), from_iter([0, 3]), from_iter([1, 2]))
    assert not verify_specific_certificate(cycle(4), 0b0101, 0b0010)
    assert not verify_specific_certificate(path(3), 0b101, 0b010)
    with pytest.raises(ClutterError):
        verify_specific_certificate(path(3), 0b001, 0b010)


def trees_up_to(n):
    for order in range(2, n + 1):
        for t in nx.nonisomorphic_trees(order):
            yield from_networkx(t)


def test_labeling_invariants_small_trees():
    for t in trees_up_to(10):
        lab = label_tree(t)
        # one more pass would change nothing: the last history entry is the fixed point
        assert lab.history[-1] == lab.alpha | lab.beta | lab.gamma
        for v in range(t.n):
            if lab.gamma >> v & 1:
                assert t.adj[v] & lab.beta
            if lab.delta >> v & 1:
                assert t.adj[v] & ~(lab.alpha | lab.gamma) == 0
        assert lab.pure_delta == lab.delta & ~lab.beta


def test_exhaustive_rules_small_trees():
    for t in trees_up_to(11):
        assert membership_rule_violations(t) == []
        if graph_complexity(t).c == 1:
            assert check_necessary_condition(t).holds


@settings(derandomize=True, max_examples=60)
@given(st.integers(3, 14), st.integers(0, 10**6))
def test_construction_on_random_trees(n, seed):
    t = from_networkx(nx.random_labeled_tree(n, seed=seed))
    lab = label_tree(t)
    leaves = [v for v in range(n) if t.degree(v) == 1]
    if lab.beta or lab.pure_delta:
        with pytest.raises(ConstructionPreconditionError):
            construct_full_complexity_mis(t, leaves[0])
        return
    for leaf in leaves:
        u, trace = construct_full_complexity_mis(t, leaf)
        assert u >> leaf & 1 and u in complexity_one_sets(t)
        assert verify_specific_certificate(t, u, trace.spec)


GAP_TREE = Graph.from_edges(11, [(0, 1), (0, 6), (1, 2), (1, 5), (2, 3), (3, 4),
                                 (6, 7), (6, 10), (7, 8), (8, 9)])


def test_prose_algorithm_gap_without_alpha_groups():
    lab = label_tree(GAP_TREE)
    assert not lab.beta and not lab.pure_delta
    with pytest.raises(CertificateFailure, match="not a maximal independent set"):
        construct_full_complexity_mis(GAP_TREE, 4, frozenset({"pendant-spec"}))
    u, _ = construct_full_complexity_mis(GAP_TREE, 4)
    assert u >> 4 & 1 and mis_edge_complexity(GAP_TREE, u) == 1


def test_pendant_completion_only_affects_the_certificate():
    t = Graph.from_edges(7, [(0, 1), (0, 3), (0, 5), (1, 2), (3, 4), (5, 6)])
    with pytest.raises(CertificateFailure, match="certificate") as info:
        construct_full_complexity_mis(t, 2, frozenset({"alpha-groups"}))
    u, _ = construct_full_complexity_mis(t, 2)
    assert info.value.trace.u_set == u and mis_edge_complexity(t, u) == 1
