#!/usr/bin/env python3
"""
Replay the structural facts behind the catalog on small graphs and report
each check with its outcome. Exits 1 if any check fails.
"""

import os
import random
import sys
from typing import Callable, List, Tuple

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from chain_lab import chain_decompose, enumerate_splits, free_splits, iter_splits  # noqa: E402
from connectivity import is_k_connected  # noqa: E402
from constructors import catalog, catalog_entry, catalog_lookup, construct  # noqa: E402
from cubic_graphs import generate_cyclically_4conn_cubic, line_graph  # noqa: E402
from enumeration import enumerate_graphs  # noqa: E402
from graph_core import contract_edge, degree_sequence, is_isomorphic  # noqa: E402
from hamiltonicity import chvatal_holds, classify_degree_two_pair, find_hamiltonian_cycle  # noqa: E402
from minor_engine import has_minor  # noqa: E402
from models import GraphFamily  # noqa: E402
from utils.config import load_settings  # noqa: E402
from utils.helper import setup_logging  # noqa: E402

W6 = construct(GraphFamily.WHEEL, 6)


def _names(graphs) -> List[str]:
    return sorted(str(catalog_lookup(g)) for g in graphs)


def squares_of_cycles() -> bool:
    return all(has_minor(construct(GraphFamily.SQUARE, n), W6) == (n >= 9) for n in range(5, 13))


def cubic_line_graphs() -> bool:
    return all(has_minor(line_graph(g), W6) for g in generate_cyclically_4conn_cubic(12))


def chvatal_on_small_graphs() -> bool:
    return all(find_hamiltonian_cycle(g) is not None
               for n in (6, 7) for g in enumerate_graphs(n, 2) if chvatal_holds(degree_sequence(g)))


def degree_two_pairs() -> bool:
    for g in enumerate_graphs(6):
        d = degree_sequence(g)
        if d[0] == d[1] == 2 and d[2] >= 3:
            classify_degree_two_pair(g)
    return True


def splits_of_c25() -> bool:
    return _names(enumerate_splits(construct(GraphFamily.SQUARE, 5), True)) == ["DW+_4", "K6", "K6_minus_e"]


def splits_of_k6() -> bool:
    return all(has_minor(g, W6) for g in enumerate_splits(construct(GraphFamily.COMPLETE, 6), True))


def splits_of_k6_minus_edge() -> bool:
    return _names(free_splits(catalog_entry("K6_minus_e").graph)) == ["K43_31", "K43_41"]


def splits_of_double_wheel_plus() -> bool:
    expected = sorted(["C27_plus_e", "K43_30", "K43_31", "K43_40", "Gamma1", "K43_41"])
    return _names(free_splits(catalog_entry("DW+_4").graph)) == expected


def planar_splits_of_c26() -> bool:
    return _names(free_splits(construct(GraphFamily.SQUARE, 6), planar=True)) == ["DW_5"]


def splits_of_seven_vertex_graphs() -> bool:
    return all(has_minor(g, W6) for e in catalog() if e.order == 7 for g in enumerate_splits(e.graph, True))


def chains_from_catalog(seed: int) -> Callable[[], bool]:
    def check() -> bool:
        rng = random.Random(seed)
        for entry in catalog():
            chain = chain_decompose(entry.graph)
            if not chain.verify(lambda g: is_k_connected(g, 4)):
                return False
            splits = list(iter_splits(entry.graph))
            for _, g in rng.sample(splits, min(5, len(splits))):
                if not is_isomorphic(contract_edge(g, (g.n - 2, g.n - 1)), entry.graph):
                    return False
        return True
    return check


def replay_checks(seed: int) -> List[Tuple[str, Callable[[], bool]]]:
    return [
        ("W6 in squares of cycles exactly from n = 9", squares_of_cycles),
        ("line graphs of cyclically 4-connected cubic graphs contain W6", cubic_line_graphs),
        ("Chvatal condition implies Hamiltonian (n = 6, 7)", chvatal_on_small_graphs),
        ("six-vertex graphs with two degree-2 vertices", degree_two_pairs),
        ("4-connected splits of C2_5", splits_of_c25),
        ("every split of K6 contains W6", splits_of_k6),
        ("W6-free splits of K6 minus an edge", splits_of_k6_minus_edge),
        ("W6-free splits of DW+_4", splits_of_double_wheel_plus),
        ("planar W6-free splits of C2_6", planar_splits_of_c26),
        ("splits of seven-vertex catalog graphs contain W6", splits_of_seven_vertex_graphs),
        ("chains and split inversion on catalog graphs", chains_from_catalog(seed)),
    ]


def replay_all() -> int:
    settings = load_settings()
    setup_logging(settings.log_level)
    checks = replay_checks(settings.seed)
    failures = 0
    print(f"Running {len(checks)} replays (seed {settings.seed})")
    for idx, (name, check) in enumerate(checks, 1):
        print(f"\n[{idx}/{len(checks)}] {name}...")
        try:
            ok = check()
        except Exception as e:
            print(f"  error: {e}")
            ok = False
        print(f"  {'ok' if ok else 'FAILED'}")
        failures += not ok
    print(f"\n{len(checks) - failures}/{len(checks)} replays passed")
    return 1 if failures else 0


if __name__ == "__main__":
    try:
        sys.exit(replay_all())
    except KeyboardInterrupt:
        print("\nReplay interrupted by user")
        sys.exit(1)
