#!/usr/bin/env python3
"""Regenerate the graph6 catalogs under tests/data from the networkx Graph Atlas.

connected_1_7.g6  every connected graph on 1..7 vertices (996 graphs).
scan_1000.g6      the same 996 graphs plus four seeded random 8-vertex graphs.
"""
import random
import sys

import networkx as nx
from networkx.readwrite.graph6 import to_graph6_bytes


def g6(graph):
    return to_graph6_bytes(graph, header=False).strip().decode()


def main(outdir):
    lines = [g6(g) for g in nx.graph_atlas_g()
             if g.number_of_nodes() > 0 and nx.is_connected(g)]
    with open(f"{outdir}/connected_1_7.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    random.seed(7)
    extra = []
    while len(extra) < 4:
        g = nx.gnp_random_graph(8, 0.45, seed=random.randrange(10**9))
        if nx.is_connected(g):
            extra.append(g6(g))
    with open(f"{outdir}/scan_1000.g6", "w") as f:
        f.write("\n".join(lines + extra) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
