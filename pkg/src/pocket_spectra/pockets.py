"""Graphs with vertex pockets and edge-pockets.

Layout of every built graph: F's ``n`` vertices first (in F's order), then
copy 1 of the pocket remainder, copy 2, ... in the order of ``V_k`` or
``E_k``.  Inside a copy, vertices keep their relative order from H.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import graph6
from .errors import AsymmetricPocket, InvalidEdge, InvalidParameter
from .graph import EdgeSubgraph, Graph, complete, edge_induced_subgraph, join, normalize_edge
from .isomorphism import are_isomorphic


@dataclass(frozen=True)
class VertexPocketSpec:
    F: Graph
    Vk: tuple[int, ...]
    H: Graph
    v: int

    def __post_init__(self):
        vk = tuple(int(u) for u in self.Vk)
        object.__setattr__(self, "Vk", vk)
        if not vk or len(vk) > self.F.order:
            raise InvalidParameter("need 1 <= k <= n pocket vertices")
        if len(set(vk)) != len(vk):
            raise InvalidParameter("V_k has duplicate vertices")
        if any(not 0 <= u < self.F.order for u in vk):
            raise InvalidParameter("V_k vertex outside F")
        if self.H.order < 2:
            raise InvalidParameter("pocket graph needs order m >= 2")
        if not 0 <= self.v < self.H.order:
            raise InvalidParameter(f"specified vertex {self.v} is not a vertex of H")

    @property
    def n(self) -> int:
        return self.F.order

    @property
    def m(self) -> int:
        return self.H.order

    @property
    def k(self) -> int:
        return len(self.Vk)

    @property
    def remainder(self) -> Graph:
        """H - v (called H_1 when v is a dominating vertex)."""
        return self.H.delete_vertices([self.v])

    def to_json(self) -> dict:
        return {
            "type": "vertex",
            "F": graph6.encode(self.F),
            "H": graph6.encode(self.H),
            "Vk": list(self.Vk),
            "v": self.v,
        }


@dataclass(frozen=True)
class EdgePocketSpec:
    """Edge-pocket data.  ``flip`` lists indices ``i`` whose edge ``e_i =
    (a, b)`` is pasted with ``b`` as ``u`` instead of the default ``a < b``."""

    F: Graph
    Ek: tuple[tuple[int, int], ...]
    H: Graph
    uv: tuple[int, int]
    flip: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        ek = tuple(normalize_edge(e) for e in self.Ek)
        object.__setattr__(self, "Ek", ek)
        object.__setattr__(self, "uv", (int(self.uv[0]), int(self.uv[1])))
        object.__setattr__(self, "flip", frozenset(int(i) for i in self.flip))
        if self.F.order < 2:
            raise InvalidParameter("host graph needs order n >= 2")
        if self.H.order < 3:
            raise InvalidParameter("edge-pocket graph needs order m >= 3")
        if not ek:
            raise InvalidParameter("need at least one pasted edge")
        if len(set(ek)) != len(ek):
            raise InvalidEdge("E_k lists an edge twice")
        for a, b in ek:
            if not self.F.has_edge(a, b):
                raise InvalidEdge(f"{a}-{b} is not an edge of F")
        u, v = self.uv
        if not self.H.has_edge(u, v):
            raise InvalidEdge(f"{u}-{v} is not an edge of H")
        if any(not 0 <= i < len(ek) for i in self.flip):
            raise InvalidParameter("flip index outside E_k")
        if not pocket_is_symmetric(self.H, u, v):
            raise AsymmetricPocket(f"H - {u} is not isomorphic to H - {v}")

    @property
    def n(self) -> int:
        return self.F.order

    @property
    def m(self) -> int:
        return self.H.order

    @property
    def k(self) -> int:
        return len(self.Ek)

    @property
    def remainder(self) -> Graph:
        """H - {u, v} (called H_2 when u, v dominate H)."""
        return self.H.delete_vertices(self.uv)

    @property
    def subgraph(self) -> EdgeSubgraph:
        """The subgraph of F spanned by E_k, with its order p and regularity r."""
        return edge_induced_subgraph(self.F, self.Ek)

    def oriented_edges(self) -> list[tuple[int, int]]:
        """``(host of u, host of v)`` per pasted edge."""
        return [(b, a) if i in self.flip else (a, b) for i, (a, b) in enumerate(self.Ek)]

    def to_json(self) -> dict:
        out = {
            "type": "edge",
            "F": graph6.encode(self.F),
            "H": graph6.encode(self.H),
            "Ek": [list(e) for e in self.Ek],
            "uv": list(self.uv),
        }
        if self.flip:
            out["flip"] = sorted(self.flip)
        return out


def pocket_is_symmetric(h: Graph, u: int, v: int) -> bool:
    """Whether ``H - u`` is isomorphic to ``H - v``.

    The transposition swapping u and v is tried first (always an
    automorphism when both dominate H); otherwise the capped search runs.
    """
    perm = list(range(h.order))
    perm[u], perm[v] = v, u
    p = np.asarray(perm)
    if np.array_equal(h.adjacency[np.ix_(p, p)], h.adjacency):
        return True
    return are_isomorphic(h.delete_vertices([u]), h.delete_vertices([v]))[0]


def spec_from_json(data: dict | str):
    if isinstance(data, str):
        data = json.loads(data)
    f = graph6.decode(data["F"])
    h = graph6.decode(data["H"])
    kind = data.get("type", "edge" if "Ek" in data else "vertex")
    if kind == "vertex":
        return VertexPocketSpec(f, tuple(data["Vk"]), h, int(data["v"]))
    if kind == "edge":
        return EdgePocketSpec(
            f, tuple(tuple(e) for e in data["Ek"]), h, tuple(data["uv"]),
            frozenset(data.get("flip", ())),
        )
    raise InvalidParameter(f"unknown spec type {kind!r}")


def build_vertex_pockets(spec: VertexPocketSpec) -> Graph:
    n, m, k = spec.n, spec.m, spec.k
    rest = [w for w in range(m) if w != spec.v]
    local = {w: i for i, w in enumerate(rest)}
    hv = spec.remainder.adjacency
    attach = [local[w] for w in spec.H.neighbors(spec.v)]
    size = n + k * (m - 1)
    a = np.zeros((size, size), dtype=np.uint8)
    a[:n, :n] = spec.F.adjacency
    for i, host in enumerate(spec.Vk):
        off = n + i * (m - 1)
        a[off : off + m - 1, off : off + m - 1] = hv
        for w in attach:
            a[host, off + w] = a[off + w, host] = 1
    return Graph(a)


def build_edge_pockets(spec: EdgePocketSpec) -> Graph:
    n, m, k = spec.n, spec.m, spec.k
    u, v = spec.uv
    rest = [w for w in range(m) if w not in (u, v)]
    local = {w: i for i, w in enumerate(rest)}
    hr = spec.remainder.adjacency
    nu = [local[w] for w in spec.H.neighbors(u) if w != v]
    nv = [local[w] for w in spec.H.neighbors(v) if w != u]
    size = n + k * (m - 2)
    a = np.zeros((size, size), dtype=np.uint8)
    a[:n, :n] = spec.F.adjacency
    for i, (hu, hv) in enumerate(spec.oriented_edges()):
        off = n + i * (m - 2)
        a[off : off + m - 2, off : off + m - 2] = hr
        for w in nu:
            a[hu, off + w] = a[off + w, hu] = 1
        for w in nv:
            a[hv, off + w] = a[off + w, hv] = 1
    return Graph(a)


def corona(f: Graph, h: Graph) -> Graph:
    """F o H: a copy of K_1 v H hung at every vertex of F."""
    return build_vertex_pockets(VertexPocketSpec(f, tuple(range(f.order)), join(complete(1), h), 0))


def edge_corona(f: Graph, h: Graph) -> Graph:
    """F <> H: a copy of H joined to both ends of every edge of F."""
    if f.size == 0:
        raise InvalidParameter("edge corona needs at least one edge")
    return build_edge_pockets(EdgePocketSpec(f, tuple(f.edges()), join(complete(2), h), (0, 1)))


@dataclass(frozen=True)
class AssumptionReport:
    specified_degree_full: bool
    h_remainder_regular: int | None
    ek_regular: int | None = None
    ek_spanning: bool | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def validate(spec) -> AssumptionReport:
    """Check the hypotheses the spectral formulas rely on (report only)."""
    m = spec.m
    rem = spec.remainder
    if isinstance(spec, VertexPocketSpec):
        full = len(spec.H.neighbors(spec.v)) == m - 1
        return AssumptionReport(full, rem.regularity())
    u, v = spec.uv
    full = len(spec.H.neighbors(u)) == m - 1 and len(spec.H.neighbors(v)) == m - 1
    sub = spec.subgraph
    return AssumptionReport(full, rem.regularity(), sub.regularity, sub.p == spec.n)


def pocket_blocks(spec) -> list[range]:
    """Vertex ranges of each pocket copy inside the built graph."""
    step = spec.m - 1 if isinstance(spec, VertexPocketSpec) else spec.m - 2
    return [range(spec.n + i * step, spec.n + (i + 1) * step) for i in range(spec.k)]
