"""
Named graphs and families, and the catalog of 4-connected W6-minor-free graphs.

Labelling convention for families: rim or path vertices are 0..k-1 in
cycle order and hubs are appended after them.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union

from errors import CatalogError, GraphError
from graph_core import Graph, add_edge, delete_edge
from models import CatalogEntry, GraphFamily

_MIN_ORDER = {
    GraphFamily.PATH: 1,
    GraphFamily.CYCLE: 3,
    GraphFamily.WHEEL: 3,
    GraphFamily.SQUARE: 5,
    GraphFamily.DOUBLE_WHEEL: 3,
    GraphFamily.DOUBLE_WHEEL_PLUS: 3,
    GraphFamily.COMPLETE: 1,
    GraphFamily.COMPLETE_BIPARTITE: 1,
}

_ALIASES = {
    "P": GraphFamily.PATH,
    "C": GraphFamily.CYCLE,
    "W": GraphFamily.WHEEL,
    "C2": GraphFamily.SQUARE,
    "DW": GraphFamily.DOUBLE_WHEEL,
    "DW+": GraphFamily.DOUBLE_WHEEL_PLUS,
    "K": GraphFamily.COMPLETE,
}


def _cycle_edges(k: int) -> List[Tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def construct(family: Union[GraphFamily, str], k: int, k2: Optional[int] = None) -> Graph:
    """
    Build a member of a named family.

    Args:
        family: GraphFamily or its string value
        k: family parameter (rim length, order, or first side for K_{a,b})
        k2: second side, only for complete_bipartite

    Returns:
        Graph with rim vertices 0..k-1 and hubs appended
    """
    family = GraphFamily(family) if isinstance(family, str) else family
    if k < _MIN_ORDER[family] or (family is GraphFamily.COMPLETE_BIPARTITE and (k2 is None or k2 < 1)):
        raise GraphError(f"{family.value} is not defined for k={k}" + (f", {k2}" if k2 is not None else ""))

    if family is GraphFamily.PATH:
        return Graph(k, [(i, i + 1) for i in range(k - 1)])
    if family is GraphFamily.CYCLE:
        return Graph(k, _cycle_edges(k))
    if family is GraphFamily.WHEEL:
        return Graph(k + 1, _cycle_edges(k) + [(i, k) for i in range(k)])
    if family is GraphFamily.SQUARE:
        return Graph(k, _cycle_edges(k) + [(i, (i + 2) % k) for i in range(k)])
    if family in (GraphFamily.DOUBLE_WHEEL, GraphFamily.DOUBLE_WHEEL_PLUS):
        u, v = k, k + 1
        edges = _cycle_edges(k) + [(i, u) for i in range(k)] + [(i, v) for i in range(k)]
        if family is GraphFamily.DOUBLE_WHEEL_PLUS:
            edges.append((u, v))
        return Graph(k + 2, edges)
    if family is GraphFamily.COMPLETE:
        return Graph(k, combinations(range(k), 2))
    return Graph(k + k2, [(a, k + b) for a in range(k) for b in range(k2)])


def _petersen() -> Graph:
    outer = _cycle_edges(5)
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def _cube() -> Graph:
    return Graph(8, [(a, a ^ (1 << bit)) for a in range(8) for bit in range(3) if a < a ^ (1 << bit)])


def _prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def _j_graph() -> Graph:
    # v1..v4 = 0..3 form a K4; x = 4 and y = 5 are adjacent and hang off v1 only
    return Graph(6, list(combinations(range(4), 2)) + [(4, 5), (0, 4), (0, 5)])


# K_{4,3} with V1 = {0,1,2,3} and V2 = {4,5,6}
_V1_PATH = [(0, 1), (1, 2), (2, 3)]
_V1_CYCLE = _V1_PATH + [(0, 3)]
_V2_EDGE = [(4, 5)]


def _k43(inside_v1, inside_v2) -> Graph:
    return Graph(7, [(a, b) for a in range(4) for b in range(4, 7)] + inside_v1 + inside_v2)


def _gamma1() -> Graph:
    # DW+_4 with rim vertex 0 split into x = 5 (adjacent to 0, 2, 4) and y = 6 (adjacent to 0, 2, 3)
    return Graph(7, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4),
                     (0, 5), (2, 5), (4, 5), (0, 6), (2, 6), (3, 6), (5, 6)])


_SPECIAL = {
    "petersen": _petersen,
    "cube": _cube,
    "k33": lambda: construct(GraphFamily.COMPLETE_BIPARTITE, 3, 3),
    "prism": _prism,
    "octahedron": lambda: construct(GraphFamily.SQUARE, 6),
    "J": _j_graph,
    "K43_30": lambda: _k43(_V1_PATH, []),
    "K43_31": lambda: _k43(_V1_PATH, _V2_EDGE),
    "K43_40": lambda: _k43(_V1_CYCLE, []),
    "K43_41": lambda: _k43(_V1_CYCLE, _V2_EDGE),
    "Gamma1": _gamma1,
    "C27_plus_e": lambda: add_edge(construct(GraphFamily.SQUARE, 7), 0, 3),
    "K6_minus_e": lambda: delete_edge(construct(GraphFamily.COMPLETE, 6), (0, 1)),
}

SPECIAL_NAMES = tuple(_SPECIAL)


def special(name: str) -> Graph:
    try:
        builder = _SPECIAL[name]
    except KeyError:
        raise GraphError(f"unknown graph name {name!r}") from None
    return builder()


def _w6_free_and_4_connected(g: Graph) -> bool:
    from connectivity import is_k_connected
    from minor_engine import has_minor

    return is_k_connected(g, 4) and not has_minor(g, construct(GraphFamily.WHEEL, 6))


def _unique_class(label: str, candidates) -> Graph:
    classes: Dict[bytes, Graph] = {}
    for g in candidates:
        if g.canonical not in classes and _w6_free_and_4_connected(g):
            classes[g.canonical] = g
    if len(classes) != 1:
        raise CatalogError(f"oracle for {label} produced {len(classes)} isomorphism classes, expected 1")
    return next(iter(classes.values()))


def k43_oracle(i: int, j: int) -> Graph:
    """The single 4-connected W6-minor-free way to add i edges inside V1 and j inside V2 of K_{4,3}"""
    v1_pairs = list(combinations(range(4), 2))
    v2_pairs = list(combinations(range(4, 7), 2))
    candidates = (_k43(list(a), list(b)) for a in combinations(v1_pairs, i) for b in combinations(v2_pairs, j))
    return _unique_class(f"K43_{i}{j}", candidates)


def gamma1_oracle() -> Graph:
    """The single 4-connected W6-minor-free split of a degree-4 vertex of DW+_4"""
    from chain_lab import iter_splits

    base = construct(GraphFamily.DOUBLE_WHEEL_PLUS, 4)
    candidates = (g for spec, g in iter_splits(base) if base.degree(spec.v) == 4)
    return _unique_class("Gamma1", candidates)


_ORACLES = {
    "K43_30": lambda: k43_oracle(3, 0),
    "K43_31": lambda: k43_oracle(3, 1),
    "K43_40": lambda: k43_oracle(4, 0),
    "K43_41": lambda: k43_oracle(4, 1),
    "Gamma1": gamma1_oracle,
}

_CATALOG_BUILDERS = [
    ("C2_5", lambda: construct(GraphFamily.SQUARE, 5)),
    ("C2_6", lambda: construct(GraphFamily.SQUARE, 6)),
    ("C2_7", lambda: construct(GraphFamily.SQUARE, 7)),
    ("C2_8", lambda: construct(GraphFamily.SQUARE, 8)),
    ("DW+_4", lambda: construct(GraphFamily.DOUBLE_WHEEL_PLUS, 4)),
    ("K6_minus_e", lambda: special("K6_minus_e")),
    ("K6", lambda: construct(GraphFamily.COMPLETE, 6)),
    ("C27_plus_e", lambda: special("C27_plus_e")),
    ("DW_5", lambda: construct(GraphFamily.DOUBLE_WHEEL, 5)),
    ("K43_30", lambda: special("K43_30")),
    ("K43_31", lambda: special("K43_31")),
    ("K43_40", lambda: special("K43_40")),
    ("Gamma1", lambda: special("Gamma1")),
    ("K43_41", lambda: special("K43_41")),
]

CATALOG_NAMES = tuple(name for name, _ in _CATALOG_BUILDERS)


@lru_cache(maxsize=None)
def catalog() -> Tuple[CatalogEntry, ...]:
    """
    The fourteen 4-connected W6-minor-free graphs, sorted by (order, canonical form).

    Figure-only graphs are checked against their brute-force oracles while
    the catalog is built; any disagreement raises CatalogError.
    """
    from connectivity import is_k_connected

    for name, oracle in _ORACLES.items():
        derived = oracle()
        if derived.canonical != special(name).canonical:
            raise CatalogError(f"documented placement of {name} disagrees with its oracle")
        logging.debug(f"oracle confirmed {name}")

    entries = []
    for name, build in _CATALOG_BUILDERS:
        g = build()
        if not is_k_connected(g, 4):
            raise CatalogError(f"catalog graph {name} is not 4-connected")
        entries.append(CatalogEntry(name=name, graph=g, canonical=g.canonical, order=g.n))

    if len({e.canonical for e in entries}) != len(entries):
        raise CatalogError("catalog entries are not pairwise non-isomorphic")
    entries.sort(key=lambda e: (e.order, e.canonical))
    logging.info(f"catalog built with {len(entries)} entries")
    return tuple(entries)


@lru_cache(maxsize=None)
def _catalog_index() -> Dict[bytes, str]:
    return {entry.canonical: entry.name for entry in catalog()}


def catalog_lookup(g: Graph) -> Optional[str]:
    return _catalog_index().get(g.canonical)


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise GraphError(f"no catalog entry named {name!r}")


def named_graph(text: str) -> Graph:
    """
    Resolve a constructor expression such as 'W:6', 'C2:7', 'K:3,3',
    'double_wheel:5', a special name ('petersen', 'J') or a catalog name.
    """
    if text in _SPECIAL:
        return special(text)
    if text in CATALOG_NAMES:
        return dict(_CATALOG_BUILDERS)[text]()
    if ":" not in text:
        raise GraphError(f"cannot resolve graph name {text!r}")
    head, _, args = text.partition(":")
    try:
        family = _ALIASES.get(head) or GraphFamily(head)
        params = [int(a) for a in args.split(",")]
    except ValueError:
        raise GraphError(f"cannot resolve graph name {text!r}") from None
    if len(params) == 2:
        return construct(GraphFamily.COMPLETE_BIPARTITE if family is GraphFamily.COMPLETE else family, *params)
    if len(params) != 1:
        raise GraphError(f"bad parameters in {text!r}")
    return construct(family, params[0])
