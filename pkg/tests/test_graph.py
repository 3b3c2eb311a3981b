import pytest
from hypothesis import given, settings, strategies as st

from clutter_complexity.config import Budget, BudgetExceeded, get_budget, set_budget
from clutter_complexity.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complete,
    complete_bipartite,
    cycle,
    encode_graph6,
    format_edge_list,
    generate,
    graph_stats,
    line_graph,
    parse_edge_list,
    parse_graph6,
    path,
    read_graph6_lines,
    star,
)


def reference_graph6(g: Graph) -> str:
    """Independent encoder: upper triangle column by column, 6 bits per char."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [bits[k:k + 6] for k in range(0, len(bits), 6)]
    return chr(63 + g.n) + "".join(chr(63 + int("".join(map(str, c)), 2)) for c in chunks)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_graph6_examples():
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("A?").m == 0 and parse_graph6("A?").n == 2
    assert encode_graph6(complete(2)) == "A_"
    assert encode_graph6(Graph.from_edges(2, [])) == "A?"
    assert encode_graph6(Graph.from_edges(0, [])) == "?"


@pytest.mark.parametrize("bad", ["", "A", "A_~", "A\x7f", "A`"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(bad)
    assert "offset" in str(info.value)


def test_graph6_rejects_long_form():
    with pytest.raises(GraphFormatError):
        parse_graph6("~" + "?" * 10)


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<A_\n") == complete(2)


def test_stream_reports_errors_per_line():
    out = list(read_graph6_lines(["A_", "bad!", "", "Bw"]))
    assert [type(x[1]).__name__ for x in out] == ["Graph", "GraphFormatError", "Graph"]
    assert out[1][0] == 2


@settings(derandomize=True, max_examples=200)
@given(graphs())
def test_graph6_roundtrip_and_layout(g):
    code = encode_graph6(g)
    assert code == reference_graph6(g)
    assert parse_graph6(code) == g


@settings(derandomize=True, max_examples=100)
@given(graphs())
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # not symmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_vertex_cap():
    old = get_budget()
    set_budget(Budget(vertex_cap=5))
    try:
        with pytest.raises(BudgetExceeded):
            complete(6)
    finally:
        set_budget(old)


def test_generators():
    assert complete(3).m == 3
    c7 = cycle(7)
    assert c7.m == 7 and all(c7.degree(v) == 2 for v in range(7))
    k22 = complete_bipartite(2, 2)
    assert graph_stats(k22).is_cycle and k22.m == 4
    assert star(3).degree(0) == 3
    assert generate("path", 4) == path(4)


def test_stats_examples():
    s = graph_stats(cycle(7))
    assert s.is_connected and s.regularity == 2 and s.diameter == 3 and s.is_cycle
    s = graph_stats(complete_bipartite(3, 3))
    assert s.regularity == 3 and s.is_bipartite and s.is_balanced_complete_bipartite and s.diameter == 2
    s = graph_stats(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not s.is_connected and s.diameter is None


def test_line_graph_examples():
    lg, emap = line_graph(path(3))
    assert lg == complete(2) and emap.pairs == ((0, 1), (1, 2))
    assert line_graph(complete(3))[0].m == 3
    lc7 = line_graph(cycle(7))[0]
    assert graph_stats(lc7).is_cycle and lc7.n == 7
    assert line_graph(Graph.from_edges(3, []))[0].n == 0


@settings(derandomize=True, max_examples=100)
@given(graphs(max_n=9))
def test_line_graph_adjacency(g):
    lg, emap = line_graph(g)
    for i, e in enumerate(emap.pairs):
        for j, f in enumerate(emap.pairs):
            assert lg.has_edge(i, j) == (i != j and bool(set(e) & set(f)))
