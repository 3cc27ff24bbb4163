from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np
import pandas as pd
import scipy.sparse
import scipy.sparse.csgraph

from graph_core import CanonicalForm, Edge, Graph, contract_edge, is_isomorphic


class GraphFamily(Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    SQUARE = "square"
    DOUBLE_WHEEL = "double_wheel"
    DOUBLE_WHEEL_PLUS = "double_wheel_plus"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"


class DegreeTwoVerdict(Enum):
    """Outcome for six-vertex graphs whose two smallest degrees are both 2"""
    HAMILTONIAN = "hamiltonian"
    SHARED_NEIGHBORS_EXCEPTION = "shared_neighbors_exception"
    J_EXCEPTION = "J_exception"


def _components(g: Graph, vertices) -> Tuple[int, np.ndarray]:
    """Connected components of the subgraph induced on `vertices` (scipy csgraph)"""
    index = sorted(vertices)
    sub = g.adjacency_matrix()[np.ix_(index, index)]
    return scipy.sparse.csgraph.connected_components(scipy.sparse.csr_matrix(sub), directed=False)


@dataclass(frozen=True)
class SeparatorCertificate:
    """A vertex cut together with two sides it separates"""
    cut: FrozenSet[int]
    sides: Tuple[FrozenSet[int], FrozenSet[int]]

    def verify(self, g: Graph) -> bool:
        a, b = self.sides
        if not a or not b or a & b or (a | b) & self.cut:
            return False
        return not any(g.neighbors(v) & b for v in a)

    def describe(self) -> str:
        a, b = self.sides
        return f"cut: {sorted(self.cut)}; sides: {sorted(a)} | {sorted(b)}"


@dataclass(frozen=True)
class ModelVerdict:
    """Result of checking a minor model; falsy when a clause is violated"""
    valid: bool
    clause: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class MinorModel:
    """Branch sets of G for each H-vertex plus a G-edge witnessing each H-edge"""
    branch_sets: Dict[int, FrozenSet[int]]
    edge_witnesses: Dict[Edge, Edge]

    def lines(self) -> List[str]:
        out = [f"h-vertex {i}: {{{', '.join(map(str, sorted(self.branch_sets[i])))}}}"
               for i in sorted(self.branch_sets)]
        out.extend(f"h-edge ({i},{j}): g-edge ({u},{v})"
                   for (i, j), (u, v) in sorted(self.edge_witnesses.items()))
        return out

    def summary(self) -> str:
        return "; ".join(self.lines())

    def check(self, g: Graph, h: Graph) -> ModelVerdict:
        if set(self.branch_sets) != set(range(h.n)):
            return ModelVerdict(False, "coverage", "branch sets do not match the pattern vertices")
        seen = set()
        for i in range(h.n):
            branch = self.branch_sets[i]
            if not branch or any(not 0 <= v < g.n for v in branch):
                return ModelVerdict(False, "coverage", f"branch set {i} empty or out of range")
            if seen & branch:
                return ModelVerdict(False, "disjointness", f"branch set {i} overlaps another")
            seen |= branch
            count, _ = _components(g, branch)
            if count != 1:
                return ModelVerdict(False, "connectivity", f"branch set {i} induces {count} components")
        for i, j in h.edges():
            witness = self.edge_witnesses.get(Edge(i, j))
            if witness is None or not g.has_edge(*witness):
                return ModelVerdict(False, "adjacency", f"no witness edge for ({i},{j})")
            u, v = witness
            a, b = self.branch_sets[i], self.branch_sets[j]
            if not ((u in a and v in b) or (u in b and v in a)):
                return ModelVerdict(False, "adjacency", f"witness ({u},{v}) does not join {i} and {j}")
        return ModelVerdict(True)


@dataclass(frozen=True)
class HamiltonCycle:
    vertices: Tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        seq = self.vertices
        if len(seq) != g.n or len(set(seq)) != g.n or g.n < 3:
            return False
        return all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n))


@dataclass(frozen=True)
class SplitSpec:
    """
    Split of vertex v: X and Y cover N(v), may overlap, and each has at
    least two vertices.
    """
    v: int
    X: FrozenSet[int]
    Y: FrozenSet[int]

    def problem(self, g: Graph) -> Optional[str]:
        if not 0 <= self.v < g.n:
            return f"vertex {self.v} out of range"
        if self.X | self.Y != g.neighbors(self.v):
            return f"X and Y do not cover exactly N({self.v})"
        if len(self.X) < 2 or len(self.Y) < 2:
            return "X and Y need at least two vertices each"
        return None


@dataclass
class Chain:
    """Graphs g_0..g_k where g_{i+1} = g_i / contracted[i]"""
    graphs: List[Graph]
    contracted: List[Edge] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.contracted)

    @property
    def final(self) -> Graph:
        return self.graphs[-1]

    def verify(self, four_connected=None) -> bool:
        if len(self.graphs) != len(self.contracted) + 1:
            return False
        for i, e in enumerate(self.contracted):
            if not self.graphs[i].has_edge(*e):
                return False
            if contract_edge(self.graphs[i], e) != self.graphs[i + 1]:
                return False
        if four_connected is not None:
            return all(four_connected(g) for g in self.graphs)
        return True


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    canonical: CanonicalForm
    order: int

    def matches(self, g: Graph) -> bool:
        return is_isomorphic(self.graph, g)


@dataclass
class Classification:
    four_connected: bool
    connectivity: int
    w6_free: bool
    catalog_name: Optional[str]
    model: Optional[MinorModel] = None

    @property
    def violates_theorem(self) -> bool:
        return self.four_connected and (self.w6_free != (self.catalog_name is not None))

    def describe(self) -> str:
        parts = [f"4-connected: {'yes' if self.four_connected else 'no'}",
                 f"W6-minor-free: {'yes' if self.w6_free else 'no'}"]
        if not self.w6_free and self.model is not None:
            parts.append(f"certificate: {self.model.summary()}")
        if self.catalog_name is not None:
            parts.append(f"catalog: {self.catalog_name}")
        elif self.four_connected and self.w6_free:
            parts.append("catalog: not in catalog - theorem violated")
        return "; ".join(parts)


@dataclass
class OrderSummary:
    order: int
    four_connected: int
    w6_free: int
    names: List[str]


@dataclass
class TheoremReport:
    max_n: int
    rows: List[OrderSummary] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(row.w6_free for row in self.rows)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.missing

    def table(self):
        return pd.DataFrame(
            [(row.order, row.four_connected, row.w6_free, ", ".join(row.names)) for row in self.rows],
            columns=["order", "4-connected", "W6-minor-free", "names"])

    def to_text(self) -> str:
        lines = [f"W6-minor-free 4-connected graphs up to order {self.max_n}", ""]
        lines.append(self.table().to_string(index=False) if self.rows else "(no orders checked)")
        lines.append("")
        lines.append(f"total: {self.total}")
        lines.append("counterexamples:")
        lines.extend(f"  {g6}" for g6 in self.counterexamples)
        lines.append("missing catalog entries:")
        lines.extend(f"  {name}" for name in self.missing)
        lines.append(f"status: {'ok' if self.ok else 'DISCREPANCIES FOUND'}")
        return "\n".join(lines)

    def save(self, path: str):
        with open(path, "w") as f:
            f.write(self.to_text() + "\n")
