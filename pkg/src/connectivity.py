"""
Vertex connectivity with separator certificates, cyclic 4-connectivity of
cubic graphs, and planarity by excluded minors.
"""

import logging
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from errors import GraphError
from graph_core import Graph
from models import SeparatorCertificate


def connected_components(g: Graph, removed=()) -> List[frozenset]:
    """
    Components of g minus `removed`, each a frozenset of original vertex ids.
    Uses scipy's sparse connected-components routine.
    """
    removed = set(removed)
    kept = [v for v in range(g.n) if v not in removed]
    if not kept:
        return []
    sub = g.adjacency_matrix()[np.ix_(kept, kept)]
    count, labels = scipy.sparse.csgraph.connected_components(scipy.sparse.coo_matrix(sub), directed=False)
    components = [set() for _ in range(count)]
    for v, label in zip(kept, labels):
        components[label].add(v)
    return sorted((frozenset(c) for c in components), key=min)


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def vertex_connectivity(g: Graph) -> int:
    """
    kappa(g) by Menger: the minimum number of vertex-disjoint paths over
    nonadjacent pairs (networkx max-flow). Complete graphs give n - 1.
    """
    if g.n <= 1:
        return 0
    if _is_complete(g):
        return g.n - 1
    return nx.node_connectivity(g.to_networkx())


def minimum_separator(g: Graph) -> Optional[SeparatorCertificate]:
    """A minimum vertex cut with two sides it separates; None for complete graphs"""
    if g.n <= 1 or _is_complete(g):
        return None
    components = connected_components(g)
    if len(components) > 1:
        cut = frozenset()
    else:
        cut = frozenset(nx.minimum_node_cut(g.to_networkx()))
        components = connected_components(g, cut)
    first = components[0]
    rest = frozenset().union(*components[1:])
    return SeparatorCertificate(cut=cut, sides=(first, rest))


def connectivity_report(g: Graph) -> Tuple[int, Optional[SeparatorCertificate]]:
    kappa = vertex_connectivity(g)
    certificate = minimum_separator(g) if kappa < g.n - 1 else None
    return kappa, certificate


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    if k <= 0:
        return True
    if g.min_degree < k:
        return False
    return vertex_connectivity(g) >= k


def brute_force_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g (exhaustive; small graphs only)"""
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            if len(connected_components(g, cut)) > 1:
                return size
    return max(g.n - 1, 0)


def is_cyclically_4_connected_cubic(g: Graph) -> bool:
    """
    True when no set of at most three edges separates two parts that both
    contain a cycle. Every bipartition (S, V - S) with S holding vertex 0 is
    checked; a cut is only inspected further when it has at most three edges.
    """
    if not g.is_regular(3):
        raise GraphError("graph not cubic")
    n = g.n
    masks = g.neighbor_masks
    full = (1 << n) - 1
    nx_graph = g.to_networkx()

    for rest in range(1 << (n - 1)):
        side = (rest << 1) | 1
        if side == full:
            continue
        cut = sum(bin(masks[v] & ~side).count("1") for v in range(n) if side >> v & 1)
        if cut > 3:
            continue
        inside = [v for v in range(n) if side >> v & 1]
        outside = [v for v in range(n) if not side >> v & 1]
        if not nx.is_forest(nx_graph.subgraph(inside)) and not nx.is_forest(nx_graph.subgraph(outside)):
            logging.debug(f"cyclic {cut}-edge cut between {inside} and {outside}")
            return False
    return True


def is_planar(g: Graph) -> bool:
    """Wagner: planar exactly when neither K5 nor K_{3,3} is a minor"""
    from constructors import construct
    from minor_engine import has_minor
    from models import GraphFamily

    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    k5 = construct(GraphFamily.COMPLETE, 5)
    k33 = construct(GraphFamily.COMPLETE_BIPARTITE, 3, 3)
    return not has_minor(g, k5) and not has_minor(g, k33)
