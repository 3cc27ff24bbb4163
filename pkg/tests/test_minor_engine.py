import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from connectivity import is_k_connected
from constructors import catalog, construct, special
from cubic_graphs import add_handle, line_graph
from enumeration import enumerate_graphs
from errors import GraphError
from graph_core import Edge, Graph, contract_edge, delete_edge
from minor_engine import (_reduction_closure, find_minor_model, has_minor, has_minor_by_reduction, has_topological_minor,
                          minors_by_reduction, pattern_order, verify_minor_model, w6_free_7vertex)
from models import GraphFamily, MinorModel

W6 = construct(GraphFamily.WHEEL, 6)
K4 = construct(GraphFamily.COMPLETE, 4)
K5 = construct(GraphFamily.COMPLETE, 5)
K33 = construct(GraphFamily.COMPLETE_BIPARTITE, 3, 3)


def test_pattern_order_starts_at_highest_degree():
    assert pattern_order(W6)[0] == 6
    assert sorted(pattern_order(W6)) == list(range(7))


def test_graph_is_its_own_minor():
    model = find_minor_model(W6, W6)
    assert model is not None
    assert verify_minor_model(W6, W6, model)


def test_empty_pattern_and_size_rejections():
    assert has_minor(K4, Graph(0))
    assert not has_minor(K4, K5)
    assert not has_minor(construct(GraphFamily.CYCLE, 8), K4)


@pytest.mark.parametrize("n, expected", [(5, False), (6, False), (7, False), (8, False), (9, True), (10, True)])
def test_w6_in_squares_of_cycles(n, expected):
    assert has_minor(construct(GraphFamily.SQUARE, n), W6) == expected


@pytest.mark.slow
@pytest.mark.parametrize("n", [11, 12])
def test_w6_in_larger_squares_of_cycles(n):
    assert has_minor(construct(GraphFamily.SQUARE, n), W6)


def test_certificate_for_square_of_nine_cycle():
    g = construct(GraphFamily.SQUARE, 9)
    model = find_minor_model(g, W6)
    assert verify_minor_model(g, W6, model)
    assert len(model.lines()) == W6.n + W6.m


def test_catalog_graphs_are_w6_free():
    for entry in catalog():
        assert not has_minor(entry.graph, W6), entry.name


def test_petersen_has_k5_minor_but_no_subdivision():
    petersen = special("petersen")
    assert has_minor(petersen, K5)
    assert not has_topological_minor(petersen, K5)
    assert has_topological_minor(petersen, K33)


def test_topological_minor_of_subdivision():
    # K4 with every edge subdivided once
    edges = []
    for i, (u, v) in enumerate(K4.edges()):
        edges += [(u, 4 + i), (4 + i, v)]
    assert has_topological_minor(Graph(10, edges), K4)
    assert not has_topological_minor(construct(GraphFamily.CYCLE, 6), K4)


def test_model_checker_reports_broken_clauses():
    g = construct(GraphFamily.CYCLE, 4)
    h = construct(GraphFamily.CYCLE, 3)
    good = find_minor_model(g, h)
    assert verify_minor_model(g, h, good)

    overlap = dict(good.branch_sets)
    overlap[0] = overlap[0] | overlap[1]
    verdict = verify_minor_model(g, h, MinorModel(overlap, good.edge_witnesses))
    assert not verdict and verdict.clause == "disjointness"

    split = MinorModel({0: frozenset({0, 2}), 1: frozenset({1}), 2: frozenset({3})},
                       {Edge(0, 1): Edge(0, 1), Edge(0, 2): Edge(2, 3), Edge(1, 2): Edge(1, 2)})
    assert verify_minor_model(g, h, split).clause == "connectivity"

    missing = MinorModel(good.branch_sets, {})
    assert verify_minor_model(g, h, missing).clause == "adjacency"

    partial = MinorModel({0: frozenset({0})}, {})
    assert verify_minor_model(g, h, partial).clause == "coverage"


def test_minor_preserved_by_contraction(rng):
    g = random_graph(rng, 8, p=0.6)
    for e in g.edges()[:5]:
        if has_minor(contract_edge(g, e), K4):
            assert has_minor(g, K4)


def test_parallel_search_matches_sequential():
    g = construct(GraphFamily.SQUARE, 9)
    sequential = find_minor_model(g, W6)
    parallel = find_minor_model(g, W6, workers=2)
    assert parallel is not None
    assert parallel.branch_sets == sequential.branch_sets


def test_branch_size_cap():
    c6 = construct(GraphFamily.CYCLE, 6)
    assert has_minor(c6, construct(GraphFamily.CYCLE, 3))
    assert not has_minor(c6, construct(GraphFamily.CYCLE, 3), max_branch_size=1)


def test_w6_free_7vertex_matches_search():
    for entry in catalog():
        if entry.order == 7:
            assert w6_free_7vertex(entry.graph)
    dominated = _seven_vertex_with_dominating_vertex()
    assert not w6_free_7vertex(dominated)
    assert has_minor(dominated, W6)
    with pytest.raises(GraphError):
        w6_free_7vertex(construct(GraphFamily.SQUARE, 8))


def _seven_vertex_with_dominating_vertex():
    # C2_6 plus a vertex joined to everything is 4-connected with a degree-6 vertex
    base = construct(GraphFamily.SQUARE, 6)
    return Graph(7, list(base.edges()) + [(v, 6) for v in range(6)])


def test_reduction_oracle_small_cases():
    assert has_minor_by_reduction(K5, K4)
    assert not has_minor_by_reduction(construct(GraphFamily.CYCLE, 5), K4)
    assert Graph(0).canonical in minors_by_reduction(K4)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6), graphs(min_n=1, max_n=5))
def test_search_agrees_with_reduction_oracle(g, h):
    model = find_minor_model(g, h)
    assert (model is not None) == has_minor_by_reduction(g, h)
    if model is not None:
        assert verify_minor_model(g, h, model)


@pytest.mark.slow
def test_w6_search_agrees_with_reduction_on_seven_vertices(rng):
    for _ in range(40):
        g = random_graph(rng, 7, p=0.75)
        assert has_minor(g, W6) == has_minor_by_reduction(g, W6)


@pytest.mark.parametrize("root", ["k33", "cube"])
def test_w6_in_line_graphs_of_small_cubic_graphs(root):
    assert has_minor(line_graph(special(root)), W6)


def test_handle_keeps_cube_as_topological_minor():
    cube = special("cube")
    e1 = cube.edges()[0]
    e2 = next(e for e in cube.edges() if not set(e) & set(e1))
    assert has_topological_minor(add_handle(cube, e1, e2), cube)
    assert not has_topological_minor(cube, K33)


def test_w6_free_7vertex_agrees_with_search_on_census():
    four_connected = [g for g in enumerate_graphs(7, 4) if is_k_connected(g, 4)]
    assert four_connected
    for g in four_connected:
        assert w6_free_7vertex(g) == (not has_minor(g, W6))


PATTERNS = [K4, K5, K33, construct(GraphFamily.WHEEL, 5), W6]


def test_search_agrees_with_reduction_oracle_on_standard_patterns(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(5, 7), p=rng.uniform(0.4, 0.9))
        for h in PATTERNS:
            model = find_minor_model(g, h)
            assert (model is not None) == has_minor_by_reduction(g, h)
            if model is not None:
                assert verify_minor_model(g, h, model)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), graphs(min_n=2, max_n=5))
def test_minors_of_the_pattern_are_found_too(g, h):
    if not has_minor(g, h):
        return
    for e in h.edges():
        assert has_minor(g, delete_edge(h, e))
        assert has_minor(g, contract_edge(h, e))


def test_reduction_memo_is_bounded_and_ignores_labels():
    w5 = construct(GraphFamily.WHEEL, 5)
    assert minors_by_reduction(w5.relabel([5, 4, 3, 2, 1, 0])) == minors_by_reduction(w5)
    assert _reduction_closure.cache_info().maxsize is not None
