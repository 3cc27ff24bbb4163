"""
Simple undirected graphs on vertices 0..n-1.

Graphs are immutable values: every edit returns a new Graph. Isomorphism
classes are identified by a canonical form computed with colour refinement
and an automorphism-pruned search over individualisations, which is fast
enough for the orders used here (n <= 16).
"""

import logging
from collections import defaultdict
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from errors import GraphError

DegreeSequence = Tuple[int, ...]
CanonicalForm = bytes


class Edge(NamedTuple):
    """Unordered edge, normalised so that u < v"""
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    """Immutable simple graph stored as per-vertex neighbour sets"""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adjacency = [set() for _ in range(n)]
        for a, b in edges:
            u, v = Edge.of(a, b)
            if u < 0 or v >= n:
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adj: Tuple[FrozenSet[int], ...] = tuple(frozenset(s) for s in adjacency)

    @classmethod
    def _from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        graph = cls.__new__(cls)
        graph._adj = tuple(frozenset(s) for s in adjacency)
        return graph

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None) -> "Graph":
        """Graph on max endpoint + 1 vertices unless n is given"""
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges), default=-1) + 1
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Import a networkx graph, numbering its nodes in sorted order"""
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        return cls(len(index), ((index[a], index[b]) for a, b in nx_graph.edges() if a != b))

    @property
    def n(self) -> int:
        return len(self._adj)

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_regular(self, d: Optional[int] = None) -> bool:
        if self.n == 0:
            return True
        target = self.degrees[0] if d is None else d
        return all(deg == target for deg in self.degrees)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    @cached_property
    def _edges(self) -> Tuple[Edge, ...]:
        return tuple(Edge(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v)

    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, bit w set when w is adjacent"""
        return tuple(sum(1 << w for w in s) for s in self._adj)

    @cached_property
    def _matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self._edges:
            matrix[u, v] = matrix[v, u] = 1
        matrix.flags.writeable = False
        return matrix

    def adjacency_matrix(self) -> np.ndarray:
        return self._matrix

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self._edges)
        return nx_graph

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]"""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertex set")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, renumbered in increasing order"""
        removed = set(vertices)
        kept = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(kept)}
        return Graph(len(kept), ((index[u], index[v]) for u, v in self._edges
                                 if u in index and v in index))

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph._from_adjacency([full - self._adj[v] - {v} for v in range(self.n)])

    @cached_property
    def _canonical(self) -> Tuple[Tuple[int, ...], CanonicalForm]:
        return _CanonicalSearch(self).run()

    @property
    def canonical(self) -> CanonicalForm:
        return self._canonical[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = Edge.of(*e)
    if not g.has_edge(u, v):
        raise GraphError(f"no such edge ({u}, {v})")
    adjacency = list(g._adj)
    adjacency[u] = adjacency[u] - {v}
    adjacency[v] = adjacency[v] - {u}
    return Graph._from_adjacency(adjacency)


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """
    Contract edge e = (a, b) with a < b and drop parallel edges.

    The merged vertex keeps index a, b disappears, and every vertex above b
    moves down by one. All other vertices keep their index.
    """
    a, b = Edge.of(*e)
    if not g.has_edge(a, b):
        raise GraphError(f"no such edge ({a}, {b})")

    def new_index(w: int) -> int:
        w = a if w == b else w
        return w if w < b else w - 1

    edges = {Edge.of(new_index(x), new_index(y)) for x, y in g.edges() if (x, y) != (a, b)}
    return Graph(g.n - 1, edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    u, v = Edge.of(u, v)
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adjacency = list(g._adj)
    adjacency[u] = adjacency[u] | {v}
    adjacency[v] = adjacency[v] | {u}
    return Graph._from_adjacency(adjacency)


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(sorted(g.degrees))


def canonical_form(g: Graph) -> CanonicalForm:
    return g.canonical


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Vertex order (position -> vertex) whose adjacency matrix is the canonical one"""
    return g._canonical[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or degree_sequence(g) != degree_sequence(h):
        return False
    return g.canonical == h.canonical


def _refine(adjacency: Sequence[FrozenSet[int]], colors: List[int]) -> List[int]:
    """Split colour classes by neighbour-colour multisets until stable"""
    count = len(set(colors))
    while True:
        signatures = [(colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
                      for v in range(len(adjacency))]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return refined
        colors, count = refined, len(ranking)


def _individualize(colors: List[int], v: int) -> List[int]:
    keys = [(c, u != v) for u, c in enumerate(colors)]
    ranking = {key: rank for rank, key in enumerate(sorted(set(keys)))}
    return [ranking[key] for key in keys]


@lru_cache(maxsize=None)
def _upper_triangle(n: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, 1)


class _CanonicalSearch:
    """
    Search tree of individualise-and-refine; the canonical form is the
    largest packed upper triangle over all leaves. Subtrees are skipped when
    a known automorphism fixing the current path, or a twin transposition,
    maps them onto one already explored.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.adjacency = g._adj
        self.matrix = g.adjacency_matrix()
        self.best: Optional[bytes] = None
        self.best_order: Optional[List[int]] = None
        self.automorphisms: List[List[int]] = []

    def run(self) -> Tuple[Tuple[int, ...], CanonicalForm]:
        header = self.n.to_bytes(2, "big")
        if self.n <= 1:
            return tuple(range(self.n)), header
        self._visit(_refine(self.adjacency, [0] * self.n), [])
        return tuple(self.best_order), header + self.best

    def _certificate(self, order: List[int]) -> bytes:
        permuted = self.matrix[np.ix_(order, order)]
        return np.packbits(permuted[_upper_triangle(self.n)]).tobytes()

    def _orbits(self, path: List[int]) -> List[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in path):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _twins(self, v: int, t: int) -> bool:
        return self.adjacency[v] - {t} == self.adjacency[t] - {v}

    def _visit(self, colors: List[int], path: List[int]):
        cells = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        target = None
        for color in sorted(cells):
            cell = cells[color]
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            self._leaf(colors)
            return

        tried: List[int] = []
        for v in target:
            orbits = self._orbits(path)
            if any(orbits[v] == orbits[t] or self._twins(v, t) for t in tried):
                continue
            tried.append(v)
            self._visit(_refine(self.adjacency, _individualize(colors, v)), path + [v])

    def _leaf(self, colors: List[int]):
        order = sorted(range(self.n), key=colors.__getitem__)
        certificate = self._certificate(order)
        if self.best is None or certificate > self.best:
            self.best, self.best_order = certificate, order
        elif certificate == self.best:
            gamma = [0] * self.n
            for position, vertex in enumerate(self.best_order):
                gamma[vertex] = order[position]
            if any(gamma[v] != v for v in range(self.n)):
                self.automorphisms.append(gamma)


def automorphisms(g: Graph) -> List[Tuple[int, ...]]:
    """All automorphisms of a small graph, as image tuples"""
    n = g.n
    colors = _refine(g._adj, [0] * n)
    images = [-1] * n
    used = [False] * n
    found: List[Tuple[int, ...]] = []

    def extend(v: int):
        if v == n:
            found.append(tuple(images))
            return
        for w in range(n):
            if used[w] or colors[w] != colors[v]:
                continue
            if all((u in g._adj[v]) == (images[u] in g._adj[w]) for u in range(v)):
                images[v], used[w] = w, True
                extend(v + 1)
                images[v], used[w] = -1, False

    extend(0)
    logging.debug(f"{len(found)} automorphisms for {g!r}")
    return found
