#!/usr/bin/env python3
"""
Example usage of the graph library
Walks the catalog of 4-connected W6-minor-free graphs and classifies a few
graphs that are not in it.
"""

import os
import sys
from typing import List

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from constructors import catalog, construct, special  # noqa: E402
from graph_core import degree_sequence  # noqa: E402
from graph_io import emit_graph6  # noqa: E402
from hamiltonicity import find_hamiltonian_cycle  # noqa: E402
from models import GraphFamily  # noqa: E402
from theorem import classify  # noqa: E402


def print_catalog():
    """Print every catalog graph with its basic invariants"""
    print("=" * 80)
    print("CATALOG OF 4-CONNECTED W6-MINOR-FREE GRAPHS")
    print("=" * 80)
    for entry in catalog():
        g = entry.graph
        cycle = find_hamiltonian_cycle(g)
        print(f"{entry.name:<12} n={g.n} m={g.m:<3} degrees={degree_sequence(g)} graph6={emit_graph6(g)}")
        print(f"{'':<12} hamiltonian cycle: {' '.join(map(str, cycle.vertices)) if cycle else 'none'}")


def sample_graphs() -> List[tuple]:
    return [
        ("W6", construct(GraphFamily.WHEEL, 6)),
        ("C2_9", construct(GraphFamily.SQUARE, 9)),
        ("petersen", special("petersen")),
        ("J", special("J")),
        ("DW_5", construct(GraphFamily.DOUBLE_WHEEL, 5)),
    ]


def classify_samples():
    """Classify graphs inside and outside the catalog"""
    print("\n" + "=" * 80)
    print("CLASSIFICATIONS")
    print("=" * 80)
    for name, g in sample_graphs():
        result = classify(g)
        print(f"{name}: {result.describe()}")


def main():
    print_catalog()
    classify_samples()


if __name__ == "__main__":
    main()
