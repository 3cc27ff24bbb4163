"""
Classification of single graphs and exhaustive verification of the
W6-minor-free 4-connected catalog against the census.
"""

import logging
from typing import Optional

from connectivity import is_k_connected, vertex_connectivity
from constructors import catalog, catalog_lookup, construct
from enumeration import enumerate_graphs
from graph_core import Graph
from graph_io import emit_graph6
from minor_engine import find_minor_model, has_minor
from models import Classification, GraphFamily, OrderSummary, TheoremReport


def classify(g: Graph, workers: int = 1) -> Classification:
    """4-connectivity, W6-minor-freeness with a certificate, and catalog name"""
    model = find_minor_model(g, construct(GraphFamily.WHEEL, 6), workers=workers)
    return Classification(
        four_connected=is_k_connected(g, 4),
        connectivity=vertex_connectivity(g),
        w6_free=model is None,
        catalog_name=catalog_lookup(g),
        model=model,
    )


def verify_theorem(max_n: int = 8, workers: int = 1, cache_dir: Optional[str] = None) -> TheoremReport:
    """
    For each order 5..max_n compare the 4-connected W6-minor-free census
    classes with the catalog entries of that order.
    """
    w6 = construct(GraphFamily.WHEEL, 6)
    report = TheoremReport(max_n=max_n)
    for n in range(5, max_n + 1):
        census = enumerate_graphs(n, 4, workers=workers, cache_dir=cache_dir)
        four_connected = [g for g in census if is_k_connected(g, 4)]
        names = []
        free = 0
        for g in four_connected:
            if has_minor(g, w6):
                continue
            free += 1
            name = catalog_lookup(g)
            if name is None:
                report.counterexamples.append(emit_graph6(g))
                logging.error(f"order {n}: W6-minor-free graph {emit_graph6(g)} is not in the catalog")
            else:
                names.append(name)
        expected = {entry.name for entry in catalog() if entry.order == n}
        report.missing.extend(sorted(expected - set(names)))
        report.rows.append(OrderSummary(order=n, four_connected=len(four_connected), w6_free=free,
                                        names=sorted(names)))
        logging.info(f"order {n}: {len(census)} classes, {len(four_connected)} 4-connected, {free} W6-minor-free")
    return report
