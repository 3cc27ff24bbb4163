import pytest

from connectivity import is_k_connected
from constructors import (CATALOG_NAMES, SPECIAL_NAMES, catalog, catalog_entry, catalog_lookup, construct,
                          gamma1_oracle, k43_oracle, named_graph, special)
from errors import GraphError
from graph_core import add_edge, degree_sequence, is_isomorphic
from models import GraphFamily

CATALOG_EDGES = {
    "C2_5": 10, "C2_6": 12, "C2_7": 14, "C2_8": 16, "DW+_4": 13, "K6_minus_e": 14, "K6": 15,
    "C27_plus_e": 15, "DW_5": 15, "K43_30": 15, "K43_31": 16, "K43_40": 16, "Gamma1": 16, "K43_41": 17,
}


@pytest.mark.parametrize("family, k, n, m", [
    (GraphFamily.PATH, 1, 1, 0),
    (GraphFamily.CYCLE, 6, 6, 6),
    (GraphFamily.WHEEL, 6, 7, 12),
    (GraphFamily.SQUARE, 7, 7, 14),
    (GraphFamily.DOUBLE_WHEEL, 5, 7, 15),
    (GraphFamily.DOUBLE_WHEEL_PLUS, 4, 6, 13),
    (GraphFamily.COMPLETE, 6, 6, 15),
])
def test_family_sizes(family, k, n, m):
    g = construct(family, k)
    assert (g.n, g.m) == (n, m)


def test_small_squares_are_complete_and_octahedron():
    assert is_isomorphic(construct(GraphFamily.SQUARE, 5), construct(GraphFamily.COMPLETE, 5))
    assert is_isomorphic(construct(GraphFamily.SQUARE, 6), special("octahedron"))
    assert is_isomorphic(construct(GraphFamily.DOUBLE_WHEEL, 4), special("octahedron"))


def test_wheel_labelling():
    w6 = construct(GraphFamily.WHEEL, 6)
    assert w6.degree(6) == 6
    assert w6.has_edge(0, 5)


@pytest.mark.parametrize("family, k", [
    (GraphFamily.WHEEL, 2), (GraphFamily.CYCLE, 2), (GraphFamily.SQUARE, 4), (GraphFamily.PATH, 0),
])
def test_family_domain(family, k):
    with pytest.raises(GraphError):
        construct(family, k)


def test_complete_bipartite_needs_two_sides():
    assert construct("complete_bipartite", 3, 3).m == 9
    with pytest.raises(GraphError):
        construct(GraphFamily.COMPLETE_BIPARTITE, 3)


def test_special_graphs():
    assert special("petersen").is_regular(3) and special("petersen").n == 10
    assert special("cube").is_regular(3) and special("cube").n == 8
    assert degree_sequence(special("J")) == (2, 2, 3, 3, 3, 5)
    assert set(SPECIAL_NAMES) >= {"petersen", "cube", "k33", "prism", "octahedron", "J"}
    with pytest.raises(GraphError):
        special("tutte")


def test_k43_variants_share_degrees_but_differ():
    k31, k40 = special("K43_31"), special("K43_40")
    assert degree_sequence(k31) == degree_sequence(k40) == (4, 4, 4, 5, 5, 5, 5)
    assert not is_isomorphic(k31, k40)
    assert degree_sequence(special("Gamma1")) == (4, 4, 4, 5, 5, 5, 5)


def test_catalog_has_fourteen_distinct_4_connected_graphs():
    entries = catalog()
    assert len(entries) == 14
    assert {e.name for e in entries} == set(CATALOG_NAMES)
    assert len({e.canonical for e in entries}) == 14
    assert [e.order for e in entries] == sorted(e.order for e in entries)
    for e in entries:
        assert is_k_connected(e.graph, 4)
        assert e.graph.m == CATALOG_EDGES[e.name]


def test_catalog_order_counts():
    orders = [e.order for e in catalog()]
    assert [orders.count(n) for n in (5, 6, 7, 8)] == [1, 4, 8, 1]


def test_catalog_lookup_is_up_to_isomorphism():
    g = construct(GraphFamily.DOUBLE_WHEEL, 5)
    perm = [3, 6, 0, 1, 5, 2, 4]
    assert catalog_lookup(g.relabel(perm)) == "DW_5"
    assert catalog_lookup(construct(GraphFamily.WHEEL, 6)) is None
    assert catalog_entry("K6").matches(construct(GraphFamily.COMPLETE, 6))


def test_oracles_agree_with_documented_placements():
    for i, j in [(3, 0), (3, 1), (4, 0), (4, 1)]:
        assert is_isomorphic(k43_oracle(i, j), special(f"K43_{i}{j}"))
    assert is_isomorphic(gamma1_oracle(), special("Gamma1"))


def test_named_graph_expressions():
    assert named_graph("W:6") == construct(GraphFamily.WHEEL, 6)
    assert named_graph("C2:7") == construct(GraphFamily.SQUARE, 7)
    assert named_graph("K:3,3") == construct(GraphFamily.COMPLETE_BIPARTITE, 3, 3)
    assert named_graph("double_wheel:5") == construct(GraphFamily.DOUBLE_WHEEL, 5)
    assert named_graph("DW_5") == construct(GraphFamily.DOUBLE_WHEEL, 5)
    assert named_graph("J") == special("J")
    for bad in ["W", "W:x", "nope:3", "W:1,2,3"]:
        with pytest.raises(GraphError):
            named_graph(bad)


@pytest.mark.parametrize("i", range(7))
def test_every_distance_three_chord_of_c27_gives_the_same_graph(i):
    g = add_edge(construct(GraphFamily.SQUARE, 7), i, (i + 3) % 7)
    assert is_isomorphic(g, special("C27_plus_e"))
