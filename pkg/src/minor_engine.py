"""
Minor containment with certificates.

H is a minor of G exactly when G has disjoint connected branch sets, one
per vertex of H, with a G-edge between the branch sets of every H-edge.
The search assigns branch sets to pattern vertices one at a time:

  - pattern vertices are taken by descending degree, then by how many of
    their neighbours are already placed;
  - candidate branch sets are connected sets of free vertices, generated
    smallest first, that touch the branch set of every placed neighbour;
  - a branch set needs at least as many free outside neighbours as the
    pattern vertex has unplaced neighbours;
  - pattern symmetry is broken with the stabiliser chain of Aut(H): within
    an orbit the branch set placed first holds the smallest vertex;
  - after each placement every unplaced pattern vertex must still have a
    free component touching all of its placed neighbours.

The order is fixed, so certificates are reproducible between runs.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional

from errors import GraphError
from graph_core import CanonicalForm, Edge, Graph, automorphisms, canonical_labeling, contract_edge, delete_edge
from models import MinorModel, ModelVerdict


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def pattern_order(h: Graph) -> List[int]:
    order: List[int] = []
    placed = set()
    while len(order) < h.n:
        nxt = max((v for v in range(h.n) if v not in placed),
                  key=lambda v: (len(h.neighbors(v) & placed), h.degree(v), -v))
        order.append(nxt)
        placed.add(nxt)
    return order


class _PatternPlan:
    """Placement order, neighbour positions and symmetry-breaking bounds for a pattern"""

    def __init__(self, h: Graph):
        self.order = pattern_order(h)
        position = {v: i for i, v in enumerate(self.order)}
        self.neighbor_positions = [sorted(position[w] for w in h.neighbors(v)) for v in self.order]
        self.placed_neighbors = [[p for p in ps if p < i] for i, ps in enumerate(self.neighbor_positions)]
        self.later_neighbors = [sum(1 for p in ps if p > i) for i, ps in enumerate(self.neighbor_positions)]

        self.bound_by: List[List[int]] = [[] for _ in self.order]
        stabilizer = automorphisms(h)
        for i, hv in enumerate(self.order):
            for u in {gamma[hv] for gamma in stabilizer} - {hv}:
                self.bound_by[position[u]].append(i)
            stabilizer = [gamma for gamma in stabilizer if gamma[hv] == hv]


@lru_cache(maxsize=64)
def _plan(h: Graph) -> _PatternPlan:
    return _PatternPlan(h)


class MinorSearch:
    """Backtracking assignment of branch sets for one (G, H) pair"""

    def __init__(self, g: Graph, h: Graph, max_branch_size: Optional[int] = None):
        self.g = g
        self.h = h
        self.plan = _plan(h)
        self.masks = g.neighbor_masks
        self.full = (1 << g.n) - 1
        self.cap = g.n if max_branch_size is None else max_branch_size
        k = h.n
        self.branches = [0] * k
        self.around = [0] * k
        self.nodes = 0

    def _neighborhood(self, mask: int) -> int:
        out = 0
        for v in _bits(mask):
            out |= self.masks[v]
        return out & ~mask

    def _connected_sets(self, allowed: int, seeds: int, budget: int) -> Iterator[int]:
        level = sorted(1 << v for v in _bits(seeds & allowed))
        size = 1
        while level:
            yield from level
            if size >= budget:
                return
            grown = set()
            for s in level:
                for v in _bits(self._neighborhood(s) & allowed):
                    grown.add(s | (1 << v))
            level = sorted(grown)
            size += 1

    def candidates(self, position: int, used: int) -> Iterator[int]:
        plan = self.plan
        free = self.full & ~used
        remaining = len(plan.order) - position - 1
        budget = min(self.cap, free.bit_count() - remaining)
        lower = max((_lowest(self.branches[i]) for i in plan.bound_by[position]), default=-1)
        allowed = free & ~((1 << (lower + 1)) - 1)
        if budget < 1 or not allowed:
            return
        placed = [self.branches[i] for i in plan.placed_neighbors[position]]
        seeds = allowed & self.around[plan.placed_neighbors[position][0]] if placed else allowed
        need = plan.later_neighbors[position]
        for branch in self._connected_sets(allowed, seeds, budget):
            around = self._neighborhood(branch)
            if any(not around & p for p in placed):
                continue
            if (around & free).bit_count() < need:
                continue
            yield branch

    def _components(self, mask: int) -> List[int]:
        components = []
        while mask:
            comp = frontier = mask & -mask
            while frontier:
                frontier = self._neighborhood(frontier) & mask & ~comp
                comp |= frontier
            components.append(comp)
            mask &= ~comp
        return components

    def _feasible(self, position: int, used: int) -> bool:
        plan = self.plan
        components = self._components(self.full & ~used)
        for j in range(position + 1, len(plan.order)):
            touching = [self.around[i] for i in plan.neighbor_positions[j] if i <= position]
            if not touching:
                continue
            if not any(all(comp & t for t in touching) for comp in components):
                return False
        return True

    def _set(self, position: int, branch: int):
        self.branches[position] = branch
        self.around[position] = self._neighborhood(branch)

    def _place(self, position: int, used: int) -> bool:
        if position == len(self.plan.order):
            return True
        for branch in self.candidates(position, used):
            self.nodes += 1
            self._set(position, branch)
            grown = used | branch
            if self._feasible(position, grown) and self._place(position + 1, grown):
                return True
        self.branches[position] = 0
        return False

    def run(self, first: Optional[int] = None) -> bool:
        if self.h.n == 0:
            return True
        if first is None:
            found = self._place(0, 0)
        else:
            self._set(0, first)
            found = self._feasible(0, first) and self._place(1, first)
        logging.debug(f"minor search {self.h!r} in {self.g!r}: {self.nodes} nodes, found={found}")
        return found

    def model(self) -> MinorModel:
        order = self.plan.order
        branch_sets = {order[i]: frozenset(_bits(self.branches[i])) for i in range(len(order))}
        witnesses: Dict[Edge, Edge] = {}
        for a, b in self.h.edges():
            witnesses[Edge(a, b)] = min(Edge.of(u, v) for u in branch_sets[a]
                                        for v in self.g.neighbors(u) if v in branch_sets[b])
        return MinorModel(branch_sets=branch_sets, edge_witnesses=witnesses)


def _search_from(args) -> Optional[MinorModel]:
    g, h, cap, first = args
    search = MinorSearch(g, h, cap)
    return search.model() if search.run(first) else None


def _find_parallel(g: Graph, h: Graph, cap: Optional[int], workers: int) -> Optional[MinorModel]:
    firsts = list(MinorSearch(g, h, cap).candidates(0, 0))
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        # map() yields in submission order, so the first hit is the sequential answer
        for model in pool.map(_search_from, [(g, h, cap, b) for b in firsts]):
            if model is not None:
                return model
        return None
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def find_minor_model(g: Graph, h: Graph, max_branch_size: Optional[int] = None,
                     workers: int = 1) -> Optional[MinorModel]:
    if h.n == 0:
        return MinorModel(branch_sets={}, edge_witnesses={})
    if h.n > g.n or h.m > g.m:
        return None
    if workers > 1:
        return _find_parallel(g, h, max_branch_size, workers)
    search = MinorSearch(g, h, max_branch_size)
    return search.model() if search.run() else None


def has_minor(g: Graph, h: Graph, max_branch_size: Optional[int] = None, workers: int = 1) -> bool:
    return find_minor_model(g, h, max_branch_size, workers) is not None


def verify_minor_model(g: Graph, h: Graph, m: MinorModel) -> ModelVerdict:
    """Check a model against its definition without trusting the search"""
    return m.check(g, h)


class _TopologicalSearch:
    """Map pattern vertices to branch vertices and route internally disjoint paths"""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.order = pattern_order(h)
        self.image: Dict[int, int] = {}
        self.used = set()

    def _paths(self, source: int, target: int) -> Iterator[List[int]]:
        def extend(path, seen):
            for w in sorted(self.g.neighbors(path[-1])):
                if w == target:
                    yield path + [w]
                elif w not in self.used and w not in seen:
                    yield from extend(path + [w], seen | {w})

        yield from extend([source], {source})

    def _route(self, source: int, targets: List[int], k: int, position: int) -> bool:
        if k == len(targets):
            return self._place(position + 1)
        for path in self._paths(source, targets[k]):
            interior = path[1:-1]
            self.used.update(interior)
            if self._route(source, targets, k + 1, position):
                return True
            self.used.difference_update(interior)
        return False

    def _place(self, position: int) -> bool:
        if position == len(self.order):
            return True
        hv = self.order[position]
        targets = [self.image[w] for w in sorted(self.h.neighbors(hv)) if w in self.image]
        for c in range(self.g.n):
            if c in self.used or self.g.degree(c) < self.h.degree(hv):
                continue
            self.image[hv] = c
            self.used.add(c)
            if self._route(c, targets, 0, position):
                return True
            self.used.discard(c)
            del self.image[hv]
        return False

    def run(self) -> bool:
        return self._place(0)


def has_topological_minor(g: Graph, h: Graph) -> bool:
    """True when g has a subgraph that is a subdivision of h"""
    if h.n > g.n or h.m > g.m:
        return False
    # a subdivision is in particular a minor, and the minor search fails fast
    if not has_minor(g, h):
        return False
    return _TopologicalSearch(g, h).run()


def w6_free_7vertex(g: Graph) -> bool:
    """On 4-connected seven-vertex graphs, W6-minor-free means no vertex of degree 6"""
    from connectivity import is_k_connected

    if g.n != 7 or not is_k_connected(g, 4):
        raise GraphError("expected a 4-connected graph on seven vertices")
    return g.max_degree <= 5


def _representative(g: Graph) -> Graph:
    labeling = canonical_labeling(g)
    perm = [0] * g.n
    for position, v in enumerate(labeling):
        perm[v] = position
    return g.relabel(perm)


def minors_by_reduction(g: Graph) -> FrozenSet[CanonicalForm]:
    """
    Canonical forms of every minor of g, found by expanding single edge
    deletions, single edge contractions and removal of isolated vertices.
    Independent of the branch-set search; meant for graphs up to seven vertices.
    """
    return _reduction_closure(_representative(g))


@lru_cache(maxsize=1 << 14)
def _reduction_closure(g: Graph) -> FrozenSet[CanonicalForm]:
    found = {g.canonical}
    for e in g.edges():
        found |= minors_by_reduction(delete_edge(g, e))
        found |= minors_by_reduction(contract_edge(g, e))
    for v in range(g.n):
        if g.degree(v) == 0:
            found |= minors_by_reduction(g.delete_vertices([v]))
    return frozenset(found)


def has_minor_by_reduction(g: Graph, h: Graph) -> bool:
    return h.canonical in minors_by_reduction(g)
