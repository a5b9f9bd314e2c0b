import json
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from errors import DomainError, PreconditionError, SizeLimitError
from graphs.constructions import build_d_star, build_k_star
from graphs.ecgraph import (
    ColoredGraph,
    average_degree,
    disjoint_union,
    drop_low_degree_check,
    is_balanced_small,
    is_proper,
    random_proper_coloring,
    validate_proper,
)
from graphs.io import graph_from_json, graph_to_dot, graph_to_json, graph_to_networkx, load_graph, save_graph
from rainbow.paths import longest_rainbow_path


def test_rejects_loops_parallel_edges_and_bad_vertices():
    with pytest.raises(DomainError):
        ColoredGraph(3, [(1, 1, 0)])
    with pytest.raises(DomainError):
        ColoredGraph(3, [(0, 1, 0), (1, 0, 2)])
    with pytest.raises(DomainError):
        ColoredGraph(3, [(0, 3, 0)])
    with pytest.raises(DomainError):
        ColoredGraph(-1, [])


def test_edges_are_normalized_and_sorted():
    g = ColoredGraph(4, [(3, 1, 5), (2, 0, 1), (1, 0, 2)])
    assert [(e.u, e.v, e.color) for e in g.edges] == [(0, 1, 2), (0, 2, 1), (1, 3, 5)]
    assert g.color_of(3, 1) == 5
    assert g.color_of(2, 3) is None
    assert g.adjacency == g.rebuild_adjacency()


def test_validate_proper_examples():
    assert validate_proper(build_k_star(2)) == []
    assert validate_proper(ColoredGraph(2, [(0, 1, 0)])) == []
    triangle = ColoredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
    assert len(validate_proper(triangle)) == 3
    assert not is_proper(triangle)


def test_average_degree_examples():
    assert average_degree(build_d_star(3)) == 4
    assert average_degree(ColoredGraph(5, [])) == 0
    assert average_degree(build_k_star(2)) == 3
    assert isinstance(average_degree(ColoredGraph(3, [(0, 1, 0)])), Fraction)
    with pytest.raises(DomainError):
        average_degree(ColoredGraph(0, []))


def test_is_balanced_small_examples():
    assert is_balanced_small(build_d_star(3)).balanced
    assert is_balanced_small(ColoredGraph(1, [])).balanced

    k4_edges = [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)]
    result = is_balanced_small(ColoredGraph(5, k4_edges + [(3, 4, 3)]))
    assert not result.balanced
    assert result.witness == (0, 1, 2, 3)
    assert result.witness_density == 3
    assert result.density == Fraction(14, 5)


def test_is_balanced_small_refuses_large_graphs():
    with pytest.raises(SizeLimitError):
        is_balanced_small(ColoredGraph(21, []))
    with pytest.raises(SizeLimitError):
        is_balanced_small(build_k_star(3), max_n=7)


def test_drop_low_degree_check_examples():
    star = ColoredGraph(5, [(0, i, i) for i in range(1, 5)])
    with pytest.raises(PreconditionError):
        drop_low_degree_check(star, 1)
    triangle_plus_isolated = ColoredGraph(4, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert drop_low_degree_check(triangle_plus_isolated, 3)


@hyp_settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=10), st.floats(min_value=0.1, max_value=1.0), st.integers(0, 2 ** 32))
def test_deleting_a_low_degree_vertex_raises_the_average(n, p, seed):
    g = random_proper_coloring(n, p, random.Random(seed))
    if g.edge_count == 0:
        return
    density = average_degree(g)
    for v in range(g.n):
        if Fraction(g.degree(v)) < density / 2:
            assert drop_low_degree_check(g, v)


@hyp_settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.floats(min_value=0.0, max_value=1.0), st.integers(0, 2 ** 32))
def test_random_proper_coloring_is_proper(n, p, seed):
    g = random_proper_coloring(n, p, random.Random(seed))
    assert validate_proper(g) == []


def test_disjoint_union_examples(d3):
    union = disjoint_union(build_d_star(2), 3)
    assert (union.n, union.edge_count, union.color_count) == (12, 18, 3)

    g = build_k_star(2)
    assert disjoint_union(g, 1, pad_to=g.n) == g
    with pytest.raises(DomainError):
        disjoint_union(g, 2, pad_to=7)

    padded = disjoint_union(g, 2, pad_to=10)
    assert padded.n == 10 and padded.degree(9) == 0


def test_disjoint_union_keeps_longest_rainbow_path(d3):
    assert longest_rainbow_path(disjoint_union(d3, 2)).length == longest_rainbow_path(d3).length == 3


def test_delete_vertex_and_induced(k3):
    smaller = k3.delete_vertex(0)
    assert smaller.n == 7 and smaller.edge_count == 21
    assert smaller.color_of(0, 1) == 1 ^ 2

    induced = k3.induced([1, 2, 4])
    assert induced.n == 3
    assert induced.color_of(0, 1) == 3


def test_json_round_trip(corpus, tmp_path):
    for g in corpus[:40]:
        assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g
    path = save_graph(corpus[0], tmp_path / "g.json")
    assert load_graph(path) == corpus[0]


def test_malformed_json_is_a_domain_error(tmp_path):
    with pytest.raises(DomainError):
        graph_from_json({"n": 3})
    with pytest.raises(DomainError):
        graph_from_json({"n": 2, "edges": [[0, 0, 1]]})
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(DomainError):
        load_graph(broken)


def test_dot_export(tmp_path):
    g = build_k_star(2)
    text = graph_to_dot(g)
    assert text.startswith("graph G {")
    assert text.count(" -- ") == 6
    assert '0 -- 3 [label="3"' in text
    save_graph(g, tmp_path / "g.dot")
    assert (tmp_path / "g.dot").read_text() == text


def test_networkx_view_matches(corpus):
    for g in corpus[:20]:
        view = graph_to_networkx(g)
        assert view.number_of_nodes() == g.n
        assert view.number_of_edges() == g.edge_count
        assert nx.get_edge_attributes(view, "color") == {(e.u, e.v): e.color for e in g.edges}
