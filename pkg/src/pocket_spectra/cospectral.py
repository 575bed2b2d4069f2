"""Certified cospectral pairs: checking, pocket constructions and catalog search."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import graph6
from .errors import InvalidParameter, PreconditionViolation
from .formulas import first_diff_coeff, graph_charpoly
from .graph import Graph, complete, edge_induced_subgraph, join
from .isomorphism import nonisomorphism_witness
from .pockets import EdgePocketSpec, VertexPocketSpec, build_edge_pockets, build_vertex_pockets
from .poly import Poly

KINDS = ("A", "Q")
PROVEN = ("degree-sequence", "refinement-distinguisher", "exhausted-backtracking")
MAX_SEARCH_ORDER = 20


def _kind(kind: str) -> str:
    if kind not in KINDS:
        raise InvalidParameter(f"kind must be A or Q, got {kind!r}")
    return kind


@dataclass
class CospectralCertificate:
    g1: Graph
    g2: Graph
    matrix_kind: str
    shared_charpoly: Poly
    nonisomorphic_witness: str
    witness_detail: str = ""
    ok: bool = field(default=True, init=False)

    @property
    def proves_nonisomorphic(self) -> bool:
        return self.nonisomorphic_witness in PROVEN

    def reverify(self) -> bool:
        """Recompute both charpolys and the witness from scratch."""
        p1 = graph_charpoly(self.g1, self.matrix_kind)
        p2 = graph_charpoly(self.g2, self.matrix_kind)
        if not (p1 == p2 == self.shared_charpoly):
            return False
        return nonisomorphism_witness(self.g1, self.g2)[0] == self.nonisomorphic_witness

    def to_json(self) -> dict:
        return {
            "g1": graph6.encode(self.g1),
            "g2": graph6.encode(self.g2),
            "matrix_kind": self.matrix_kind,
            "shared_charpoly": self.shared_charpoly.to_json(),
            "nonisomorphic_witness": self.nonisomorphic_witness,
            "witness_detail": self.witness_detail,
        }


@dataclass
class CospectralMismatch:
    matrix_kind: str
    reason: str
    poly1: Poly | None = None
    poly2: Poly | None = None
    first_diff_coeff: int | None = None
    ok: bool = field(default=False, init=False)

    def to_json(self) -> dict:
        return {
            "matrix_kind": self.matrix_kind,
            "reason": self.reason,
            "poly1": None if self.poly1 is None else self.poly1.to_json(),
            "poly2": None if self.poly2 is None else self.poly2.to_json(),
            "first_diff_coeff": self.first_diff_coeff,
        }


def verify_cospectral(g1: Graph, g2: Graph, kind: str = "A", polys=None):
    """Certificate when the two charpolys agree exactly, else a mismatch report.

    ``polys`` may supply precomputed charpolys.
    """
    kind = _kind(kind)
    if g1.order != g2.order:
        return CospectralMismatch(kind, "order mismatch")
    p1, p2 = polys or (graph_charpoly(g1, kind), graph_charpoly(g2, kind))
    if p1 != p2:
        return CospectralMismatch(kind, "characteristic polynomials differ", p1, p2, first_diff_coeff(p1, p2))
    grade, detail = nonisomorphism_witness(g1, g2)
    return CospectralCertificate(g1, g2, kind, p1, grade, detail)


def _seed_check(s1: Graph, s2: Graph, kind: str, min_degree: int = 0) -> int:
    r1, r2 = s1.regularity(), s2.regularity()
    if r1 is None or r2 is None or r1 != r2 or s1.order != s2.order:
        raise PreconditionViolation("seeds must be regular of the same degree and order")
    if r1 < min_degree:
        raise PreconditionViolation(f"seeds must have degree at least {min_degree}")
    res = verify_cospectral(s1, s2, kind)
    if not res.ok:
        raise PreconditionViolation(
            f"seeds are not {kind}-cospectral (first differing coefficient {res.first_diff_coeff})"
        )
    return r1


def make_cospectral_vertex_pocket_pair(f: Graph, vk, h1: Graph, h1p: Graph, kind: str = "A"):
    """Hang ``K_1 v h1`` and ``K_1 v h1p`` at ``vk``; returns ``(g1, g2, certificate)``."""
    kind = _kind(kind)
    _seed_check(h1, h1p, kind)
    k1 = complete(1)
    g1 = build_vertex_pockets(VertexPocketSpec(f, tuple(vk), join(k1, h1), 0))
    g2 = build_vertex_pockets(VertexPocketSpec(f, tuple(vk), join(k1, h1p), 0))
    return g1, g2, verify_cospectral(g1, g2, kind)


def make_cospectral_edge_pocket_pair(f: Graph, ek, h2: Graph, h2p: Graph):
    """Paste ``K_2 v h2`` and ``K_2 v h2p`` on ``ek``; Q-cospectral by construction."""
    ek = tuple(tuple(e) for e in ek)
    if edge_induced_subgraph(f, ek).regularity is None:
        raise PreconditionViolation("the pasted edges must span a regular subgraph")
    _seed_check(h2, h2p, "Q", min_degree=2)
    k2 = complete(2)
    g1 = build_edge_pockets(EdgePocketSpec(f, ek, join(k2, h2), (0, 1)))
    g2 = build_edge_pockets(EdgePocketSpec(f, ek, join(k2, h2p), (0, 1)))
    return g1, g2, verify_cospectral(g1, g2, "Q")


@dataclass
class SearchResult:
    certificates: list[tuple[int, int, CospectralCertificate]]
    errors: list[tuple[int, str]]
    scanned: int
    classes: int

    def to_json(self) -> dict:
        return {
            "scanned": self.scanned,
            "charpoly_classes": self.classes,
            "pairs": [dict(c.to_json(), line1=a, line2=b) for a, b, c in self.certificates],
            "errors": [{"line": ln, "error": msg} for ln, msg in self.errors],
        }


def search_cospectral_mates(lines: Iterable[str], kind: str = "A", require_regular: bool = False,
                            workers: int | None = None) -> SearchResult:
    """Group graph6 lines by exact charpoly and certify non-isomorphic pairs.

    Pairs come out in (first line, second line) order; a pair is emitted
    unless it is shown isomorphic.
    """
    kind = _kind(kind)
    graphs, errors = [], []
    for lineno, item in graph6.iter_graph6(lines):
        if isinstance(item, Exception):
            errors.append((lineno, str(item)))
        elif item.order > MAX_SEARCH_ORDER:
            errors.append((lineno, f"order {item.order} exceeds {MAX_SEARCH_ORDER}"))
        else:
            graphs.append((lineno, item))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        polys = list(pool.map(lambda t: graph_charpoly(t[1], kind), graphs))
    groups: dict[tuple, list[int]] = {}
    for idx, p in enumerate(polys):
        groups.setdefault(p.coeffs, []).append(idx)
    certs = []
    for members in groups.values():
        for a_pos, a in enumerate(members):
            for b in members[a_pos + 1 :]:
                (la, ga), (lb, gb) = graphs[a], graphs[b]
                if require_regular:
                    ra, rb = ga.regularity(), gb.regularity()
                    if ra is None or ra != rb:
                        continue
                grade, detail = nonisomorphism_witness(ga, gb)
                if grade == "isomorphic":
                    continue
                certs.append((la, lb, CospectralCertificate(ga, gb, kind, polys[a], grade, detail)))
    certs.sort(key=lambda t: (t[0], t[1]))
    return SearchResult(certs, errors, len(graphs), len(groups))
