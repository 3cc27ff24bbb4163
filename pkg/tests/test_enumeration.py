import os

import pytest

from connectivity import is_k_connected
from constructors import catalog_lookup
from enumeration import CensusGenerator, enumerate_graphs
from graph_core import degree_sequence


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_small_census_counts(n, count):
    assert len(enumerate_graphs(n)) == count


def test_census_of_six_vertices():
    graphs = enumerate_graphs(6)
    assert len(graphs) == 156
    assert len({g.canonical for g in graphs}) == 156
    assert [g.canonical for g in graphs] == sorted(g.canonical for g in graphs)


def test_min_degree_filter_matches_full_census():
    full = [g for g in enumerate_graphs(6) if g.min_degree >= 3]
    pruned = enumerate_graphs(6, 3)
    assert [g.canonical for g in pruned] == [g.canonical for g in full]


def test_impossible_min_degree_gives_nothing():
    assert enumerate_graphs(3, 4) == []


def test_four_connected_six_vertex_graphs():
    found = sorted(catalog_lookup(g) for g in enumerate_graphs(6, 4) if is_k_connected(g, 4))
    assert found == ["C2_6", "DW+_4", "K6", "K6_minus_e"]


def test_cache_round_trip(tmp_path):
    cache_dir = str(tmp_path / "census")
    first = enumerate_graphs(5, 2, cache_dir=cache_dir)
    assert os.path.exists(os.path.join(cache_dir, "census_n5_d2.g6"))
    generator = CensusGenerator(cache_dir=cache_dir)
    cached = generator.get_cached_level(5, 2)
    assert sorted(g.canonical for g in cached) == [g.canonical for g in first]
    assert [g.canonical for g in enumerate_graphs(5, 2, cache_dir=cache_dir)] == [g.canonical for g in first]


def test_worker_count_does_not_change_result():
    sequential = enumerate_graphs(6, 2)
    parallel = enumerate_graphs(6, 2, workers=2)
    assert [g.canonical for g in parallel] == [g.canonical for g in sequential]


@pytest.mark.slow
def test_census_of_seven_vertices():
    graphs = enumerate_graphs(7)
    assert len(graphs) == 1044
    assert sum(1 for g in graphs if degree_sequence(g)[0] >= 4) == len(enumerate_graphs(7, 4))
