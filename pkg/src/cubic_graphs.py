"""
Cubic graphs: handle additions, cyclically 4-connected generation from
K_{3,3} and the cube, line graphs and their cubic roots.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from connectivity import is_cyclically_4_connected_cubic
from constructors import special
from errors import GraphError
from graph_core import Edge, Graph, is_isomorphic


def add_handle(g: Graph, e1: Sequence[int], e2: Sequence[int]) -> Graph:
    """
    Subdivide e1 with new vertex n and e2 with new vertex n + 1, then join
    the two new vertices.
    """
    if not g.is_regular(3):
        raise GraphError("graph not cubic")
    e1, e2 = Edge.of(*e1), Edge.of(*e2)
    if e1 == e2:
        raise GraphError(f"handle needs two distinct edges, got {tuple(e1)} twice")
    if set(e1) & set(e2):
        raise GraphError(f"edges {tuple(e1)} and {tuple(e2)} share an endpoint")
    for e in (e1, e2):
        if not g.has_edge(*e):
            raise GraphError(f"no such edge {tuple(e)}")
    a, b = g.n, g.n + 1
    edges = [e for e in g.edges() if e != e1 and e != e2]
    edges += [(e1.u, a), (e1.v, a), (e2.u, b), (e2.v, b), (a, b)]
    return Graph(g.n + 2, edges)


def _handle_pairs(g: Graph):
    for e1, e2 in combinations(g.edges(), 2):
        if not set(e1) & set(e2):
            yield e1, e2


def generate_cyclically_4conn_cubic(max_n: int) -> List[Graph]:
    """
    Close {K_{3,3}, cube} under handle additions up to max_n vertices and
    keep the cyclically 4-connected members, one per isomorphism class,
    sorted by (order, canonical form).
    """
    seen: Dict[bytes, Graph] = {}
    frontier = [g for g in (special("k33"), special("cube")) if g.n <= max_n]
    for g in frontier:
        seen[g.canonical] = g
    while frontier:
        grown = []
        for g in frontier:
            if g.n + 2 > max_n:
                continue
            for e1, e2 in _handle_pairs(g):
                h = add_handle(g, e1, e2)
                if h.canonical not in seen:
                    seen[h.canonical] = h
                    grown.append(h)
        if grown:
            logging.info(f"handle closure reached order {grown[0].n}: {len(grown)} new classes")
        frontier = grown
    members = [g for g in seen.values() if is_cyclically_4_connected_cubic(g)]
    return sorted(members, key=lambda g: (g.n, g.canonical))


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of g, in sorted edge order; adjacent when the edges meet"""
    edges = g.edges()
    incident: List[List[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    return Graph(len(edges), (pair for around in incident for pair in combinations(around, 2)))


def _triangle_partitions(g: Graph):
    """Yield partitions of E(g) into triangles, lowest uncovered edge first"""
    covered = set()
    triangles: List[tuple] = []
    edges = g.edges()

    def extend():
        nxt = next((e for e in edges if e not in covered), None)
        if nxt is None:
            yield list(triangles)
            return
        u, v = nxt
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            sides = (Edge(u, v), Edge.of(u, w), Edge.of(v, w))
            if sides[1] in covered or sides[2] in covered:
                continue
            covered.update(sides)
            triangles.append(tuple(sorted((u, v, w))))
            yield from extend()
            triangles.pop()
            covered.difference_update(sides)

    yield from extend()


def root_graph_cubic(g: Graph) -> Optional[Graph]:
    """
    A cubic graph whose line graph is isomorphic to g, or None.

    A line graph of a cubic graph is 4-regular and its edges split into
    triangles, one per root vertex; each vertex of g lies in two of them
    and becomes the root edge joining those two.
    """
    if g.n == 0 or g.n % 3 or not g.is_regular(4):
        return None
    for triangles in _triangle_partitions(g):
        containing: List[List[int]] = [[] for _ in range(g.n)]
        for t, triangle in enumerate(triangles):
            for v in triangle:
                containing[v].append(t)
        try:
            root = Graph(len(triangles), (tuple(pair) for pair in containing))
        except GraphError:
            continue
        if root.m == g.n and root.is_regular(3) and is_isomorphic(line_graph(root), g):
            return root
    return None
