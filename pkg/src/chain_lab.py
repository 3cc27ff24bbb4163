"""
Vertex splits and contraction chains between 4-connected graphs.

A split of v replaces v by two adjacent vertices x and y, with x joined to
X and y joined to Y, where X and Y cover N(v) and hold at least two
vertices each. X and Y may overlap. Contracting xy gives back the original
graph.
"""

import logging
from itertools import product
from typing import Dict, Iterator, List, Optional, Set, Tuple

from connectivity import is_k_connected, is_cyclically_4_connected_cubic, is_planar
from constructors import construct
from cubic_graphs import root_graph_cubic
from errors import ChainError, GraphError
from graph_core import Edge, Graph, contract_edge, is_isomorphic
from minor_engine import has_minor
from models import Chain, GraphFamily, SplitSpec


def apply_split(g: Graph, s: SplitSpec) -> Graph:
    """
    Split s.v. Vertices above v move down by one; x is n - 1 and y is n in
    the result, so contract_edge(result, (n - 1, n)) rebuilds g with v
    moved to the end.
    """
    problem = s.problem(g)
    if problem is not None:
        raise GraphError(f"invalid split of vertex {s.v}: {problem}")
    rest = g.delete_vertices([s.v])

    def shifted(w: int) -> int:
        return w if w < s.v else w - 1

    x, y = g.n - 1, g.n
    edges = list(rest.edges()) + [(x, y)]
    edges += [(x, shifted(a)) for a in s.X]
    edges += [(y, shifted(b)) for b in s.Y]
    return Graph(g.n + 1, edges)


def iter_splits(g: Graph) -> Iterator[Tuple[SplitSpec, Graph]]:
    """
    Every split of every vertex. Each neighbour goes to X, to Y or to both;
    (X, Y) and (Y, X) give isomorphic graphs, so only X <= Y is produced.
    """
    for v in range(g.n):
        around = sorted(g.neighbors(v))
        for sides in product((0, 1, 2), repeat=len(around)):
            X = frozenset(w for w, side in zip(around, sides) if side != 1)
            Y = frozenset(w for w, side in zip(around, sides) if side != 0)
            if len(X) < 2 or len(Y) < 2 or sorted(X) > sorted(Y):
                continue
            spec = SplitSpec(v=v, X=X, Y=Y)
            yield spec, apply_split(g, spec)


def enumerate_splits(g: Graph, require_4conn: bool = True) -> List[Graph]:
    """One representative per isomorphism class of splits of g, sorted by canonical form"""
    classes: Dict[bytes, Graph] = {}
    rejected: Set[bytes] = set()
    for _, h in iter_splits(g):
        key = h.canonical
        if key in classes or key in rejected:
            continue
        if require_4conn and not (h.min_degree >= 4 and is_k_connected(h, 4)):
            rejected.add(key)
            continue
        classes[key] = h
    logging.debug(f"{len(classes)} split classes of {g!r} (4-connected only: {require_4conn})")
    return [classes[key] for key in sorted(classes)]


def free_splits(g: Graph, planar: Optional[bool] = None) -> List[Graph]:
    """4-connected W6-minor-free splits, optionally restricted by planarity"""
    w6 = construct(GraphFamily.WHEEL, 6)
    found = [h for h in enumerate_splits(g, True) if not has_minor(h, w6)]
    if planar is not None:
        found = [h for h in found if is_planar(h) == planar]
    return found


def is_square_of_cycle(g: Graph) -> Optional[int]:
    if g.n < 5 or not g.is_regular(4):
        return None
    return g.n if is_isomorphic(g, construct(GraphFamily.SQUARE, g.n)) else None


def in_class_c_or_l(g: Graph) -> bool:
    """Square of a cycle, or line graph of a cyclically 4-connected cubic graph"""
    if is_square_of_cycle(g) is not None:
        return True
    root = root_graph_cubic(g)
    return root is not None and is_cyclically_4_connected_cubic(root)


def chain_decompose(g: Graph) -> Chain:
    """
    Contract the first edge (in sorted order) that keeps the graph
    4-connected until the graph is a square of a cycle or a line graph of a
    cyclically 4-connected cubic graph.
    """
    if not is_k_connected(g, 4):
        raise GraphError("chain decomposition needs a 4-connected graph")
    chain = Chain(graphs=[g])
    current = g
    while not in_class_c_or_l(current):
        for e in current.edges():
            contracted = contract_edge(current, e)
            if is_k_connected(contracted, 4):
                break
        else:
            raise ChainError("Martinov violation")
        chain.graphs.append(contracted)
        chain.contracted.append(Edge(*e))
        current = contracted
    logging.info(f"chain of length {chain.length} from {g!r} ends at {current!r}")
    return chain


def chain_search(g: Graph, target: Graph) -> Optional[Chain]:
    """
    Look for a sequence of 4-connected contractions from g to a graph
    isomorphic to target. Intermediate classes already shown to be dead ends
    are not revisited.
    """
    if not is_k_connected(g, 4):
        raise GraphError("chain search needs a 4-connected graph")
    if in_class_c_or_l(g):
        raise GraphError("graph is already a square of a cycle or a cubic line graph")
    dead: Set[bytes] = set()
    graphs: List[Graph] = [g]
    edges: List[Edge] = []

    def search(current: Graph) -> bool:
        if is_isomorphic(current, target):
            return True
        if current.n <= target.n or current.canonical in dead:
            return False
        tried: Set[bytes] = set()
        for e in current.edges():
            nxt = contract_edge(current, e)
            key = nxt.canonical
            if key in tried or key in dead:
                continue
            tried.add(key)
            if not is_k_connected(nxt, 4):
                continue
            graphs.append(nxt)
            edges.append(Edge(*e))
            if search(nxt):
                return True
            graphs.pop()
            edges.pop()
        dead.add(current.canonical)
        return False

    if search(g):
        return Chain(graphs=list(graphs), contracted=list(edges))
    return None
