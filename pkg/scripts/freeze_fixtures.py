"""Freeze regression fixtures with oracles independent of the package.

Charpolys come from sympy, isomorphism from networkx, and graphs are read
back from the bundled graph6 catalog with networkx's own decoder.
"""
import itertools
import json
from pathlib import Path

import networkx as nx
import sympy

ROOT = Path(__file__).resolve().parents[1]
CATALOG = ROOT / "src" / "pocket_spectra" / "data" / "small_graphs.g6"
OUT = ROOT / "tests" / "fixtures" / "cospectral_search.json"
REGULAR_OUT = ROOT / "tests" / "fixtures" / "regular_7_8.g6"
X = sympy.Symbol("x")


def charpoly(g: nx.Graph, kind: str) -> list[int]:
    a = nx.to_numpy_array(g, nodelist=sorted(g), dtype=int)
    m = sympy.Matrix(a)
    if kind == "Q":
        m = m + sympy.diag(*[sum(row) for row in a.tolist()])
    coeffs = m.charpoly(X).all_coeffs()
    return [int(c) for c in reversed(coeffs)]


def pairs(order: int, kind: str) -> list[dict]:
    lines = [ln for ln in CATALOG.read_text().split() if nx.from_graph6_bytes(ln.encode()).order() == order]
    graphs = [nx.from_graph6_bytes(ln.encode()) for ln in lines]
    polys = [charpoly(g, kind) for g in graphs]
    out = []
    for i, j in itertools.combinations(range(len(graphs)), 2):
        if polys[i] == polys[j] and not nx.is_isomorphic(graphs[i], graphs[j]):
            out.append({"line1": i + 1, "line2": j + 1, "g1": lines[i], "g2": lines[j], "charpoly": polys[i]})
    return out


def _labeled_regular(n: int, r: int):
    """Labeled r-regular graphs on range(n) with vertex 0 adjacent to 1..r.

    Every isomorphism class has such a representative, which keeps the
    enumeration small.
    """
    pairs_ = list(itertools.combinations(range(n), 2))
    deg = [0] * n
    chosen = []
    for j in range(1, r + 1):
        chosen.append((0, j))
        deg[0] += 1
        deg[j] += 1
    rest = [e for e in pairs_ if e[0] != 0]

    def rec(i):
        if all(d == r for d in deg):
            yield list(chosen)
            return
        if i == len(rest):
            return
        a, b = rest[i]
        # vertex a must be saturated before we move past its last pair
        if deg[a] < r and deg[b] < r:
            deg[a] += 1
            deg[b] += 1
            chosen.append((a, b))
            yield from rec(i + 1)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1
        if i + 1 < len(rest) and rest[i + 1][0] != a or i + 1 == len(rest):
            if deg[a] < r:
                return
        yield from rec(i + 1)

    yield from rec(0)


def regular_classes(n: int) -> list[nx.Graph]:
    found = []
    for r in range(n):
        if (n * r) % 2:
            continue
        if r > (n - 1) / 2:
            continue
        reps: dict[str, list[nx.Graph]] = {}
        for edges in _labeled_regular(n, r):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
            bucket = reps.setdefault(key, [])
            if not any(nx.is_isomorphic(g, h) for h in bucket):
                bucket.append(g)
        classes = [g for b in reps.values() for g in b]
        found += classes
        if r != n - 1 - r:
            found += [nx.complement(g) for g in classes]
    return found


def main() -> None:
    regular = {n: regular_classes(n) for n in (7, 8)}
    REGULAR_OUT.write_text(
        "".join(nx.to_graph6_bytes(g, header=False).decode() for n in (7, 8) for g in regular[n])
    )
    print({n: len(v) for n, v in regular.items()})
    data = {
        "order5_A": pairs(5, "A"),
        "order4_Q": pairs(4, "Q"),
        "order5_Q": pairs(5, "Q"),
        "order6_A": pairs(6, "A"),
    }
    OUT.write_text(json.dumps(data, indent=1) + "\n")
    print({k: len(v) for k, v in data.items()})


if __name__ == "__main__":
    main()
