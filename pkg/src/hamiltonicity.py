"""
Hamiltonian cycles, the Chvatal degree condition, and the six-vertex
classification of graphs with exactly two vertices of degree 2.
"""

import logging
from typing import List, Optional, Sequence

from errors import ClassificationError, GraphError
from graph_core import Graph, degree_sequence, is_isomorphic
from models import DegreeTwoVerdict, HamiltonCycle


class _CycleSearch:
    """Depth-first path extension from vertex 0 over sorted neighbours"""

    def __init__(self, g: Graph):
        self.g = g
        self.path: List[int] = [0]
        self.visited = [False] * g.n
        self.visited[0] = True

    def _viable(self) -> bool:
        # an unvisited vertex must keep two usable neighbours: unvisited ones or a path end
        ends = {self.path[0], self.path[-1]}
        for u in range(self.g.n):
            if self.visited[u]:
                continue
            usable = sum(1 for w in self.g.neighbors(u) if not self.visited[w] or w in ends)
            if usable < 2:
                return False
        return True

    def _extend(self) -> bool:
        v = self.path[-1]
        if len(self.path) == self.g.n:
            return self.g.has_edge(v, 0)
        for w in sorted(self.g.neighbors(v)):
            if self.visited[w]:
                continue
            self.visited[w] = True
            self.path.append(w)
            if self._viable() and self._extend():
                return True
            self.path.pop()
            self.visited[w] = False
        return False

    def run(self) -> Optional[HamiltonCycle]:
        if self._extend():
            return HamiltonCycle(tuple(self.path))
        return None


def find_hamiltonian_cycle(g: Graph) -> Optional[HamiltonCycle]:
    if g.n < 3 or g.min_degree < 2:
        return None
    cycle = _CycleSearch(g).run()
    logging.debug(f"hamiltonian cycle for {g!r}: {cycle.vertices if cycle else None}")
    return cycle


def chvatal_holds(d: Sequence[int]) -> bool:
    """
    Chvatal's condition on a degree sequence: for every i < n/2,
    d_i >= i + 1 or d_{n-i} >= n - i (1-indexed, ascending order).
    """
    n = len(d)
    if n < 3:
        raise GraphError(f"degree sequence of length {n} is too short")
    d = sorted(d)
    i = 1
    while i < n / 2:
        if d[i - 1] < i + 1 and d[n - i - 1] < n - i:
            return False
        i += 1
    return True


def classify_degree_two_pair(g: Graph) -> DegreeTwoVerdict:
    """
    Six-vertex graph with d1 = d2 = 2 and d3 >= 3: either Hamiltonian, or the
    two degree-2 vertices are nonadjacent with the same neighbour pair, or
    the graph is J.
    """
    from constructors import special

    d = degree_sequence(g)
    if g.n != 6 or d[0] != 2 or d[1] != 2 or d[2] < 3:
        raise GraphError(f"expected six vertices with degrees 2, 2 then >= 3, got {d}")

    if find_hamiltonian_cycle(g) is not None:
        return DegreeTwoVerdict.HAMILTONIAN
    a, b = (v for v in range(g.n) if g.degree(v) == 2)
    if not g.has_edge(a, b) and g.neighbors(a) == g.neighbors(b):
        return DegreeTwoVerdict.SHARED_NEIGHBORS_EXCEPTION
    if is_isomorphic(g, special("J")):
        return DegreeTwoVerdict.J_EXCEPTION
    raise ClassificationError(f"non-Hamiltonian graph {g!r} fits no exception class")
