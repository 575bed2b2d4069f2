"""Simple undirected graphs with dense adjacency, generators and operations.

Vertex order is significant: every construction documents the layout of its
output, and only :func:`pocket_spectra.isomorphism.are_isomorphic` compares
graphs up to relabeling.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidEdge, InvalidParameter

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``adjacency`` is stored as a read-only ``uint8`` array; ``labels`` is an
    optional tuple of per-vertex names.
    """

    adjacency: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.uint8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidParameter("adjacency must be a square matrix")
        if a.shape[0] < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        if np.any(a > 1):
            raise InvalidParameter("adjacency entries must be 0 or 1")
        if np.any(np.diag(a)):
            raise InvalidParameter("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise InvalidParameter("adjacency must be symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != a.shape[0]:
                raise InvalidParameter("need one label per vertex")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge], labels=None) -> Graph:
        if order < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        a = np.zeros((order, order), dtype=np.uint8)
        for i, j in edges:
            if not (0 <= i < order and 0 <= j < order) or i == j:
                raise InvalidEdge(f"bad edge {i}-{j} for order {order}")
            a[i, j] = a[j, i] = 1
        return cls(a, labels)

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    @property
    def size(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[Edge]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def has_edge(self, i: int, j: int) -> bool:
        return 0 <= i < self.order and 0 <= j < self.order and bool(self.adjacency[i, j])

    def neighbors(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def degrees(self) -> list[int]:
        return [int(d) for d in self.adjacency.sum(axis=1)]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def regularity(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        d = self.degrees()
        return d[0] if all(x == d[0] for x in d) else None

    def is_regular(self) -> bool:
        return self.regularity() is not None

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        idx = list(vertices)
        return Graph(self.adjacency[np.ix_(idx, idx)])

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced_subgraph([i for i in range(self.order) if i not in drop])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[i]`` plays the role of vertex ``i`` here."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise InvalidParameter("not a permutation")
        a = np.zeros_like(self.adjacency)
        p = np.asarray(perm)
        a[np.ix_(p, p)] = self.adjacency
        return Graph(a)

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.order, self.adjacency.tobytes()))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


# --- generators -------------------------------------------------------------


def complete(n: int) -> Graph:
    _check_size(n, 1, "complete")
    return Graph(np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8))


def empty(n: int) -> Graph:
    _check_size(n, 1, "empty")
    return Graph(np.zeros((n, n), dtype=np.uint8))


def cycle(n: int) -> Graph:
    _check_size(n, 3, "cycle")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_size(n, 1, "path")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _check_size(a, 1, "complete-bipartite")
    _check_size(b, 1, "complete-bipartite")
    return join(empty(a), empty(b))


def generate(kind: str, *sizes: int) -> Graph:
    """Named families: ``complete``, ``cycle``, ``path``, ``empty`` take one
    size, ``complete-bipartite`` takes two."""
    makers = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "empty": empty,
        "complete-bipartite": complete_bipartite,
    }
    try:
        maker = makers[kind]
    except KeyError:
        raise InvalidParameter(f"unknown graph family {kind!r}") from None
    return maker(*sizes)


def _check_size(n, lo, name):
    if int(n) != n or n < lo:
        raise InvalidParameter(f"{name} graph needs size >= {lo}, got {n}")


# --- operations -------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.order, g2.order
    a = np.zeros((n1 + n2, n1 + n2), dtype=np.uint8)
    a[:n1, :n1] = g1.adjacency
    a[n1:, n1:] = g2.adjacency
    return Graph(a)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts (``g1`` first)."""
    n1 = g1.order
    a = disjoint_union(g1, g2).adjacency.copy()
    a[:n1, n1:] = 1
    a[n1:, :n1] = 1
    return Graph(a)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(a, x)`` sits at index ``a * g2.order + x``."""
    a1 = g1.adjacency.astype(np.int64)
    a2 = g2.adjacency.astype(np.int64)
    a = np.kron(a1, np.eye(g2.order, dtype=np.int64)) + np.kron(
        np.eye(g1.order, dtype=np.int64), a2
    )
    return Graph(a)


def complement(g: Graph) -> Graph:
    return Graph(1 - g.adjacency - np.eye(g.order, dtype=np.uint8))


def matrices(g: Graph) -> dict[str, np.ndarray]:
    """Adjacency ``A``, degree ``D`` and signless Laplacian ``Q = D + A``
    as ``int64`` arrays."""
    a = g.adjacency.astype(np.int64)
    d = np.diag(a.sum(axis=1))
    return {"A": a, "D": d, "Q": d + a}


def adjacency_matrix(g: Graph) -> np.ndarray:
    return g.adjacency.astype(np.int64)


def signless_laplacian(g: Graph) -> np.ndarray:
    return matrices(g)["Q"]


def matrix_of(g: Graph, kind: str) -> np.ndarray:
    if kind == "A":
        return adjacency_matrix(g)
    if kind == "Q":
        return signless_laplacian(g)
    raise InvalidParameter(f"matrix kind must be 'A' or 'Q', got {kind!r}")


@dataclass(frozen=True)
class EdgeSubgraph:
    """The subgraph spanned by an edge set, with the map back into its host.

    ``vertices[i]`` is the host vertex that plays vertex ``i`` of ``graph``.
    """

    graph: Graph
    vertices: tuple[int, ...]
    regularity: int | None

    @property
    def p(self) -> int:
        return self.graph.order


def normalize_edge(e: Sequence[int]) -> Edge:
    i, j = (int(e[0]), int(e[1]))
    return (i, j) if i < j else (j, i)


def edge_induced_subgraph(f: Graph, edges: Iterable[Sequence[int]]) -> EdgeSubgraph:
    """Subgraph of ``f`` formed by exactly the listed edges and their endpoints.

    Vertices keep their relative order from ``f``.
    """
    es = [normalize_edge(e) for e in edges]
    if not es:
        raise InvalidParameter("edge set must not be empty")
    for i, j in es:
        if not f.has_edge(i, j):
            raise InvalidEdge(f"{i}-{j} is not an edge of the host graph")
    if len(set(es)) != len(es):
        raise InvalidEdge("edge listed twice")
    verts = sorted({v for e in es for v in e})
    pos = {v: k for k, v in enumerate(verts)}
    sub = Graph.from_edges(len(verts), [(pos[i], pos[j]) for i, j in es])
    return EdgeSubgraph(sub, tuple(verts), sub.regularity())


def incidence_matrix(g: Graph, edges: Sequence[Edge] | None = None) -> np.ndarray:
    """Vertex-edge incidence matrix, columns in ``g.edges()`` order."""
    es = g.edges() if edges is None else [normalize_edge(e) for e in edges]
    r = np.zeros((g.order, len(es)), dtype=np.int64)
    for c, (i, j) in enumerate(es):
        r[i, c] = r[j, c] = 1
    return r


def parse_edge_list(text: str) -> list[Edge]:
    """Parse ``"0-1 2-3"`` (whitespace or comma separated, 0-based)."""
    out = []
    for tok in text.replace(",", " ").split():
        parts = tok.split("-")
        if len(parts) != 2:
            raise InvalidEdge(f"malformed edge token {tok!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidEdge(f"malformed edge token {tok!r}") from None
    return out


def format_edge_list(edges: Iterable[Edge]) -> str:
    return " ".join(f"{i}-{j}" for i, j in edges)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn from ``rng``."""
    a = np.zeros((n, n), dtype=np.uint8)
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            a[i, j] = a[j, i] = 1
    return Graph(a)
