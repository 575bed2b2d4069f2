"""Regenerate data/small_graphs.g6: every graph on 1..6 vertices.

Uses the networkx graph atlas, which lists all graphs up to 7 vertices
ordered by vertex count, edge count, degree sequence and automorphisms.
"""
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parents[1] / "src" / "pocket_spectra" / "data" / "small_graphs.g6"
MAX_ORDER = 6


def main() -> None:
    lines = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= MAX_ORDER:
            lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()
