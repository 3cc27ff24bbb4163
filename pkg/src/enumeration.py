"""
Census of graphs on n vertices up to isomorphism.

Graphs are grown one vertex at a time: every graph on k + 1 vertices is a
graph on k vertices plus a new vertex joined to some subset of the old
ones, so the classes on k + 1 vertices come from extending every class on
k vertices in every way and keeping one representative per canonical form.
When only graphs of minimum degree d on n vertices are wanted, a class on
k vertices is kept only if its minimum degree is at least d - (n - k),
since deleting a vertex lowers any degree by at most one.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, List, Optional

from errors import GraphError
from graph_core import Graph
from graph_io import read_graph6_file, write_graph6_file
from utils.helper import ensure_directory_exists


def _level_bound(n: int, k: int, min_degree: int) -> int:
    return max(min_degree - (n - k), 0)


def _extensions(args) -> Dict[bytes, Graph]:
    """Classes obtained by adding one vertex to g whose minimum degree reaches bound"""
    g, bound = args
    k = g.n
    found: Dict[bytes, Graph] = {}
    base = [set(s) for s in (g.neighbors(v) for v in range(k))]
    for size in range(bound, k + 1):
        for attach in combinations(range(k), size):
            adjacency = [set(s) for s in base] + [set(attach)]
            for v in attach:
                adjacency[v].add(k)
            if min(len(s) for s in adjacency) < bound:
                continue
            h = Graph._from_adjacency(adjacency)
            found.setdefault(h.canonical, h)
    return found


class CensusGenerator:
    """Builds census levels, reading and writing graph6 caches when a cache dir is set"""

    def __init__(self, cache_dir: Optional[str] = None, workers: int = 1):
        self.cache_dir = cache_dir
        self.workers = max(workers, 1)

    def _cache_file(self, n: int, min_degree: int) -> Optional[str]:
        if self.cache_dir is None:
            return None
        return os.path.join(self.cache_dir, f"census_n{n}_d{min_degree}.g6")

    def get_cached_level(self, n: int, min_degree: int) -> Optional[List[Graph]]:
        path = self._cache_file(n, min_degree)
        if path is None or not os.path.exists(path):
            return None
        try:
            graphs = read_graph6_file(path)
        except GraphError as e:
            logging.error(f"Error loading {path}: {e}")
            return None
        logging.info(f"census n={n} d={min_degree} loaded from {path}")
        return graphs

    def save_level(self, graphs: List[Graph], n: int, min_degree: int):
        path = self._cache_file(n, min_degree)
        if path is None:
            return
        ensure_directory_exists(self.cache_dir)
        write_graph6_file(graphs, path)
        logging.info(f"census n={n} d={min_degree} saved to {path}")

    def _grow(self, parents: List[Graph], bound: int) -> List[Graph]:
        tasks = [(g, bound) for g in parents]
        merged: Dict[bytes, Graph] = {}
        if self.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(_extensions, tasks, chunksize=max(len(tasks) // (4 * self.workers), 1)))
        else:
            results = [_extensions(task) for task in tasks]
        # setdefault over canonical keys: the merged set is the same whatever the scheduling
        for found in results:
            for key, h in found.items():
                merged.setdefault(key, h)
        return [merged[key] for key in sorted(merged)]

    def generate(self, n: int, min_degree: int = 0) -> List[Graph]:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        cached = self.get_cached_level(n, min_degree)
        if cached is not None:
            return sorted(cached, key=lambda g: g.canonical)
        if n == 0:
            return [Graph.empty(0)]
        level = [Graph(1)] if _level_bound(n, 1, min_degree) == 0 else []
        for k in range(1, n):
            level = self._grow(level, _level_bound(n, k + 1, min_degree))
            logging.info(f"census n={n} d={min_degree}: {len(level)} classes on {k + 1} vertices")
        self.save_level(level, n, min_degree)
        return level


def enumerate_graphs(n: int, min_degree: int = 0, workers: int = 1,
                     cache_dir: Optional[str] = None) -> List[Graph]:
    """All isomorphism classes on n vertices with minimum degree >= min_degree, sorted by canonical form"""
    return CensusGenerator(cache_dir=cache_dir, workers=workers).generate(n, min_degree)
