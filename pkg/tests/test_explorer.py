import random
from itertools import permutations, product

import pytest

from errors import DomainError, PreconditionError, SizeLimitError
from explorer.colorings import (
    ColoringClass,
    canonical_labels,
    colex_edges,
    coloring_canonical_form,
    colorings_isomorphic,
    edge_index,
    graph_canonical_form,
)
from explorer.factorizations import enumerate_one_factorizations, perfect_matchings
from explorer.forall import RainbowTreePredicate, forall_check
from explorer.proper import chromatic_index_complete, enumerate_proper_colorings
from graphs.constructions import build_k6_geometric, build_round_robin
from graphs.ecgraph import ColoredGraph, validate_proper


def _relabel(g: ColoredGraph, vertex_perm, color_perm) -> ColoredGraph:
    return ColoredGraph(g.n, [(vertex_perm[e.u], vertex_perm[e.v], color_perm[e.color]) for e in g.edges])


def _naive_form(n: int, labels) -> tuple[int, ...]:
    """Minimum over all vertex permutations, colors renamed by first appearance."""
    edges = colex_edges(n)
    best = None
    for perm in permutations(range(n)):
        moved = [0] * len(edges)
        for (a, b), label in zip(edges, labels):
            moved[edge_index(perm[a], perm[b])] = label
        rename: dict[int, int] = {}
        form = tuple(rename.setdefault(x, len(rename) + 1) if x else 0 for x in moved)
        best = form if best is None or form < best else best
    return best


def _naive_proper_classes(n: int, max_colors: int) -> set:
    edges = colex_edges(n)
    classes = set()
    for labels in product(range(1, max_colors + 1), repeat=len(edges)):
        g = ColoredGraph(n, [(a, b, c) for (a, b), c in zip(edges, labels)])
        if not validate_proper(g):
            classes.add(_naive_form(n, labels))
    return classes


def test_edge_order():
    assert colex_edges(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert [edge_index(a, b) for a, b in colex_edges(5)] == list(range(10))
    assert edge_index(3, 1) == edge_index(1, 3)


def test_canonical_form_matches_naive_minimum():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 5)
        labels = [rng.randint(0, 4) for _ in range(n * (n - 1) // 2)]
        assert canonical_labels(n, labels) == _naive_form(n, labels)


def test_canonical_form_is_invariant(k6):
    rng = random.Random(11)
    for _ in range(10):
        vertices = list(range(6))
        colors = list(range(5))
        rng.shuffle(vertices)
        rng.shuffle(colors)
        moved = _relabel(k6, vertices, colors)
        assert graph_canonical_form(moved) == graph_canonical_form(k6)
        assert colorings_isomorphic(moved, k6)


def test_canonical_form_input_checks():
    with pytest.raises(DomainError):
        canonical_labels(4, [1, 2, 3])
    with pytest.raises(DomainError):
        coloring_canonical_form(3, {(1, 1): 0})


def test_non_isomorphic_colorings_are_told_apart():
    path = ColoredGraph(3, [(0, 1, 0), (1, 2, 1)])
    triangle = ColoredGraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert not colorings_isomorphic(path, triangle)
    a = ColoredGraph(4, [(0, 1, 0), (2, 3, 0), (1, 2, 1)])
    b = ColoredGraph(4, [(0, 1, 0), (2, 3, 1), (1, 2, 2)])
    assert not colorings_isomorphic(a, b)


def test_perfect_matchings():
    all_edges = list(range(6))
    assert len(list(perfect_matchings(4, all_edges))) == 3
    assert len(list(perfect_matchings(6, list(range(15))))) == 15
    assert list(perfect_matchings(4, [0])) == []


@pytest.mark.parametrize("n, classes", [(2, 1), (4, 1), (6, 1)])
def test_one_factorization_counts(n, classes):
    result = enumerate_one_factorizations(n)
    assert len(result) == classes
    for coloring in result:
        g = coloring.to_graph()
        assert validate_proper(g) == []
        assert g.color_count == n - 1


@pytest.mark.slow
def test_one_factorizations_of_k8():
    result = enumerate_one_factorizations(8)
    assert len(result) == 6
    forms = {graph_canonical_form(c.to_graph()) for c in result}
    assert len(forms) == 6
    assert any(colorings_isomorphic(c.to_graph(), build_round_robin(8)) for c in result)


def test_one_factorization_limits():
    with pytest.raises(DomainError):
        enumerate_one_factorizations(5)
    with pytest.raises(DomainError):
        enumerate_one_factorizations(0)
    with pytest.raises(SizeLimitError):
        enumerate_one_factorizations(10)


def test_round_robin_is_the_k6_class(k6):
    assert colorings_isomorphic(build_round_robin(6), k6)
    assert colorings_isomorphic(enumerate_one_factorizations(6)[0].to_graph(), k6)


def test_proper_coloring_examples():
    assert chromatic_index_complete(4) == 3
    assert chromatic_index_complete(5) == 5
    assert len(list(enumerate_proper_colorings(3, 3))) == 1
    with pytest.raises(PreconditionError):
        list(enumerate_proper_colorings(3, 2))
    with pytest.raises(SizeLimitError):
        list(enumerate_proper_colorings(7, 7))


@pytest.mark.parametrize("n, max_colors", [(3, 3), (3, 4), (4, 3), (4, 4), (4, 6)])
def test_proper_colorings_match_naive_classes(n, max_colors):
    ours = {c.labels() for c in enumerate_proper_colorings(n, max_colors)}
    assert ours == _naive_proper_classes(n, max_colors)


def test_proper_colorings_stream_is_repeatable():
    first = [c.labels() for c in enumerate_proper_colorings(4, 5)]
    second = [c.labels() for c in enumerate_proper_colorings(4, 5)]
    assert first == second


def test_k6_five_colorings_are_the_geometric_one(k6):
    classes = list(enumerate_proper_colorings(6, 5))
    assert len(classes) == 1
    assert colorings_isomorphic(classes[0].to_graph(), k6)
    report = forall_check(classes, RainbowTreePredicate.path(5, present=False))
    assert report.holds


def test_coloring_class_round_trip():
    coloring = ColoringClass.from_labels(4, (1, 2, 3, 3, 2, 1))
    assert coloring.color_count == 3
    assert coloring.labels() == (1, 2, 3, 3, 2, 1)
    g = coloring.to_graph()
    assert g.n == 4 and g.edge_count == 6
    assert coloring.to_json()["color_classes"][0] == [[0, 1], [2, 3]]


def test_forall_finds_the_k4_counterexample():
    report = forall_check(enumerate_proper_colorings(4, 6), RainbowTreePredicate.path(3, present=True))
    assert not report.holds
    assert report.counterexample.color_count == 3
    assert report.to_json()["verdict"] == "counterexample"
    assert report.nodes_visited > 0


def test_forall_is_thread_independent():
    predicate = RainbowTreePredicate.path(3, present=True)
    single = forall_check(enumerate_proper_colorings(4, 6), predicate)
    pooled = forall_check(enumerate_proper_colorings(4, 6), predicate, threads=2)
    assert single.to_json() == pooled.to_json()


def test_forall_accepts_plain_predicates():
    report = forall_check(enumerate_one_factorizations(6), lambda g: g.edge_count == 15)
    assert report.holds and report.classes_checked == 1 and report.nodes_visited == 0


@pytest.mark.slow
def test_every_proper_k5_coloring_has_a_rainbow_p4():
    report = forall_check(enumerate_proper_colorings(5, 10), RainbowTreePredicate.path(4, present=True))
    assert report.holds
    assert report.to_json()["verdict"] == "holds_for_all"
