"""Closed-form characteristic polynomials and spectra of joins and pocket graphs.

Every charpoly routine here returns a :class:`FactoredCharpoly` whose
``expanded`` polynomial is meant to equal ``charpoly_exact`` of the
assembled graph; :func:`verification_report` makes that comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import ExcludedEigenvector, InvalidParameter, PreconditionViolation
from .graph import Graph, cartesian_product, complete, cycle, matrix_of
from .linalg import char_matrix, charpoly_exact, coronal, coronal_constant_row_sum, det_rfmatrix
from .numeric import residual
from .pockets import (
    EdgePocketSpec,
    VertexPocketSpec,
    build_edge_pockets,
    build_vertex_pockets,
)
from .poly import Poly, RatFunc
from .spectrum import MP, SpectrumMultiset, quadratic_roots, spectrum_from_poly

X = Poly.x()


def _regular(g: Graph, what: str) -> int:
    r = g.regularity()
    if r is None:
        raise PreconditionViolation(f"{what} must be regular")
    return r


def graph_charpoly(g: Graph, kind: str = "A") -> Poly:
    return charpoly_exact(matrix_of(g, kind))


def graph_spectrum(g: Graph, kind: str = "A") -> SpectrumMultiset:
    return spectrum_from_poly(graph_charpoly(g, kind))


def first_diff_coeff(p1: Poly, p2: Poly) -> int | None:
    a, b = p1.coeffs, p2.coeffs
    for i in range(max(len(a), len(b))):
        if (a[i] if i < len(a) else 0) != (b[i] if i < len(b) else 0):
            return i
    return None


# -- joins -------------------------------------------------------------------


def join_charpoly_A(g1: Graph, g2: Graph) -> Poly:
    r1, r2 = _regular(g1, "first graph"), _regular(g2, "second graph")
    n1, n2 = g1.order, g2.order
    pole = Poly.linear_root(r1) * Poly.linear_root(r2)
    base = (graph_charpoly(g1) * graph_charpoly(g2)).exact_div(pole)
    return base * (pole - n1 * n2)


def join_charpoly_Q(g1: Graph, g2: Graph) -> Poly:
    r1, r2 = _regular(g1, "first graph"), _regular(g2, "second graph")
    n1, n2 = g1.order, g2.order
    f1 = graph_charpoly(g1, "Q").shift(n2)
    f2 = graph_charpoly(g2, "Q").shift(n1)
    pole = Poly.linear_root(n1 + 2 * r2) * Poly.linear_root(n2 + 2 * r1)
    return (f1 * f2).exact_div(pole) * (pole - n1 * n2)


# -- spectra of the pocket graphs themselves ----------------------------------


def hv_spectrum_A(h1: Graph) -> SpectrumMultiset:
    """A-spectrum of ``K_1 v H1`` for regular ``H1``."""
    r1 = _regular(h1, "H - v")
    m = h1.order + 1
    out = graph_spectrum(h1, "A")
    out.remove(r1)
    for z in quadratic_roots(1, -r1, -(m - 1)):
        out.add(z)
    return out


def hv_spectrum_Q(h1: Graph) -> SpectrumMultiset:
    """Q-spectrum of ``K_1 v H1`` for regular ``H1``."""
    r1 = _regular(h1, "H - v")
    m = h1.order + 1
    base = graph_spectrum(h1, "Q")
    base.remove(2 * r1)
    out = base.shifted(1)
    for z in quadratic_roots(1, -(2 * r1 + m), 2 * r1 * (m - 1)):
        out.add(z)
    return out


def huv_spectrum_Q(h2: Graph) -> SpectrumMultiset:
    """Q-spectrum of ``K_2 v H2`` for regular ``H2``."""
    r2 = _regular(h2, "H - {u, v}")
    m = h2.order + 2
    base = graph_spectrum(h2, "Q")
    base.remove(2 * r2)
    out = base.shifted(2)
    out.add(m - 2)
    s = 2 * r2 + 2
    for z in quadratic_roots(1, -(s + m), s * m - 2 * (m - 2)):
        out.add(z)
    return out


# -- factored charpolys of pocket graphs --------------------------------------


@dataclass
class FactoredCharpoly:
    """``prod(f**e for f, e in scalar_factors) * residual == expanded``.

    ``residual`` is ``det(xI - M)`` as a reduced rational function and
    ``residual_info`` records how ``M`` was assembled.
    """

    scalar_factors: list[tuple[Poly, int]]
    residual: RatFunc
    residual_info: dict
    expanded: Poly
    order: int = field(default=0)

    def check(self) -> bool:
        prod = RatFunc(1)
        for f, e in self.scalar_factors:
            prod = prod * RatFunc(f) ** e
        return prod * self.residual == RatFunc(self.expanded) and self.expanded.degree == self.order

    def to_json(self) -> dict:
        return {
            "scalar_factors": [{"poly": f.to_json(), "exponent": e} for f, e in self.scalar_factors],
            "residual": self.residual.to_json(),
            "residual_info": self.residual_info,
            "expanded": self.expanded.to_json(),
        }


def _assemble(factor: Poly, k: int, m_rows, info: dict, order: int) -> FactoredCharpoly:
    det = det_rfmatrix(char_matrix(m_rows))
    total = RatFunc(factor**k) * det
    if not total.is_polynomial():
        raise PreconditionViolation("factored form did not clear to a polynomial")
    return FactoredCharpoly([(factor, k)], det, info, total.as_poly(), order)


def _full_degree(h: Graph, w: int) -> bool:
    return len(h.neighbors(w)) == h.order - 1


def _vertex_coronal(mat, regular: int | None, shift_by: int, fast_path: bool | None) -> RatFunc:
    if fast_path and regular is None:
        raise PreconditionViolation("the regular fast path needs H - v to be regular")
    if regular is not None and fast_path is not False:
        return coronal_constant_row_sum(len(mat), regular).shift(shift_by)
    return coronal(mat).shift(shift_by)


def _rf_matrix(base: np.ndarray) -> list[list]:
    return [[RatFunc(int(e)) for e in row] for row in base]


def pocket_charpoly_A(spec: VertexPocketSpec, fast_path: bool | None = None) -> FactoredCharpoly:
    """A-charpoly of G[F, V_k, H_v] as ``f_A(H1)^k * det(xI - A(F) - Gamma * 1_{V_k})``.

    ``fast_path``: ``None`` uses ``(m-1)/(x-r1)`` when H1 is regular,
    ``True`` demands it, ``False`` always computes the coronal exactly.
    """
    if not _full_degree(spec.H, spec.v):
        raise PreconditionViolation("specified vertex must have degree m - 1")
    h1 = spec.remainder
    a1 = matrix_of(h1, "A")
    gam = _vertex_coronal(a1, h1.regularity(), 0, fast_path)
    rows = _rf_matrix(matrix_of(spec.F, "A"))
    for i in spec.Vk:
        rows[i][i] = rows[i][i] + gam
    info = {"matrix": "A", "base": "A(F)", "coronal": gam.to_json(), "pattern": "indicator", "positions": list(spec.Vk)}
    order = spec.n + spec.k * (spec.m - 1)
    return _assemble(charpoly_exact(a1), spec.k, rows, info, order)


def pocket_charpoly_Q(spec: VertexPocketSpec, fast_path: bool | None = None) -> FactoredCharpoly:
    """Q-charpoly of G[F, V_k, H_v] as
    ``f_Q(H1)(x-1)^k * det(xI - Q(F) - (m-1 + Gamma(x-1)) * 1_{V_k})``."""
    if not _full_degree(spec.H, spec.v):
        raise PreconditionViolation("specified vertex must have degree m - 1")
    h1 = spec.remainder
    q1 = matrix_of(h1, "Q")
    r1 = h1.regularity()
    gam = _vertex_coronal(q1, None if r1 is None else 2 * r1, 1, fast_path)
    coef = gam + (spec.m - 1)
    rows = _rf_matrix(matrix_of(spec.F, "Q"))
    for i in spec.Vk:
        rows[i][i] = rows[i][i] + coef
    info = {"matrix": "Q", "base": "Q(F)", "coronal": gam.to_json(), "pattern": "indicator",
            "positions": list(spec.Vk), "offset": spec.m - 1}
    order = spec.n + spec.k * (spec.m - 1)
    return _assemble(charpoly_exact(q1).shift(1), spec.k, rows, info, order)


def _edge_setup(spec: EdgePocketSpec, fast_path: bool | None):
    u, v = spec.uv
    if not (_full_degree(spec.H, u) and _full_degree(spec.H, v)):
        raise PreconditionViolation("specified edge endpoints must have degree m - 1")
    sub = spec.subgraph
    if sub.regularity is None:
        raise PreconditionViolation("the pasted edges must span a regular subgraph")
    h2 = spec.remainder
    q2 = matrix_of(h2, "Q")
    r2 = h2.regularity()
    if fast_path and r2 is None:
        raise PreconditionViolation("the regular fast path needs H - {u, v} to be regular")
    if r2 is not None and fast_path is not False:
        gam = coronal_constant_row_sum(h2.order, 2 * r2).shift(2)
    else:
        gam = coronal(q2).shift(2)
    return sub, q2, gam


def _ek_matrices(spec: EdgePocketSpec, sub) -> tuple[np.ndarray, np.ndarray]:
    """``A(E_k)`` and ``Q(E_k)`` embedded at host positions (n x n)."""
    n = spec.n
    a = np.zeros((n, n), dtype=np.int64)
    for x, y in spec.Ek:
        a[x, y] = a[y, x] = 1
    return a, a + np.diag(a.sum(axis=1))


def edge_pocket_charpoly_Q(spec: EdgePocketSpec, fast_path: bool | None = None) -> FactoredCharpoly:
    """Q-charpoly of G[F, E_k, H_uv] as ``f_Q(H2)(x-2)^k * det(xI - M)`` with
    ``M = Q(F) + r(m-2) 1_{E_k vertices} + Gamma(x-2) Q(E_k)``."""
    sub, q2, gam = _edge_setup(spec, fast_path)
    r = sub.regularity
    _, qe = _ek_matrices(spec, sub)
    rows = _rf_matrix(matrix_of(spec.F, "Q"))
    for i in sub.vertices:
        rows[i][i] = rows[i][i] + r * (spec.m - 2)
    for i in range(spec.n):
        for j in range(spec.n):
            if qe[i, j]:
                rows[i][j] = rows[i][j] + gam * int(qe[i, j])
    info = {"matrix": "Q", "base": "Q(F)", "coronal": gam.to_json(), "pattern": "Q(E_k)",
            "positions": list(sub.vertices), "offset": r * (spec.m - 2)}
    order = spec.n + spec.k * (spec.m - 2)
    return _assemble(charpoly_exact(q2).shift(2), spec.k, rows, info, order)


def spanning_edge_pocket_charpoly_Q(spec: EdgePocketSpec, fast_path: bool | None = None) -> FactoredCharpoly:
    """Same polynomial as :func:`edge_pocket_charpoly_Q`, with the residual
    written as ``r((m-2) + Gamma) I + Q(F) + Gamma A(E_k)``; needs E_k spanning."""
    sub, q2, gam = _edge_setup(spec, fast_path)
    if sub.p != spec.n:
        raise PreconditionViolation("the pasted edges must cover every vertex of F")
    r = sub.regularity
    ae, _ = _ek_matrices(spec, sub)
    diag = (gam + (spec.m - 2)) * r
    rows = _rf_matrix(matrix_of(spec.F, "Q"))
    for i in range(spec.n):
        rows[i][i] = rows[i][i] + diag
        for j in range(spec.n):
            if ae[i, j]:
                rows[i][j] = rows[i][j] + gam
    info = {"matrix": "Q", "base": "Q(F)", "coronal": gam.to_json(), "pattern": "A(E_k)",
            "positions": list(range(spec.n)), "offset": r * (spec.m - 2)}
    order = spec.n + spec.k * (spec.m - 2)
    return _assemble(charpoly_exact(q2).shift(2), spec.k, rows, info, order)


def formula_charpoly(spec, kind: str, fast_path: bool | None = None) -> FactoredCharpoly:
    """Dispatch to the factored form matching the spec type and matrix."""
    if isinstance(spec, VertexPocketSpec):
        return (pocket_charpoly_A if kind == "A" else pocket_charpoly_Q)(spec, fast_path)
    if kind != "Q":
        raise InvalidParameter("edge-pocket formulas exist for Q only")
    sub = spec.subgraph
    if sub.regularity is not None and sub.p == spec.n:
        return spanning_edge_pocket_charpoly_Q(spec, fast_path)
    return edge_pocket_charpoly_Q(spec, fast_path)


def build(spec) -> Graph:
    return build_vertex_pockets(spec) if isinstance(spec, VertexPocketSpec) else build_edge_pockets(spec)


def verification_report(spec, kind: str, fc: FactoredCharpoly | None = None) -> dict:
    fc = fc or formula_charpoly(spec, kind)
    direct = graph_charpoly(build(spec), kind)
    return {
        "spec": spec.to_json(),
        "formula_poly": fc.expanded.to_json(),
        "direct_poly": direct.to_json(),
        "equal": fc.expanded == direct,
        "first_diff_coeff": first_diff_coeff(fc.expanded, direct),
    }


# -- inherited eigenvalues ----------------------------------------------------

INHERIT_KINDS = ("A-vertex", "Q-vertex", "Q-edge")


def inherited_spectrum(kind: str, spec) -> tuple[SpectrumMultiset, Poly]:
    """Eigenvalues contributed by the pockets (each ``k`` times) and the
    degree ``n + k`` polynomial carrying the rest of the spectrum.

    The coronal is computed exactly rather than through the regular
    shortcut, so identical residual polynomials for different pockets are
    a genuine check.
    """
    if kind == "A-vertex":
        r = _regular(spec.remainder, "H - v")
        fc = pocket_charpoly_A(spec, fast_path=False)
        base = graph_spectrum(spec.remainder, "A")
        base.remove(r)
        pole = Poly.linear_root(r)
    elif kind == "Q-vertex":
        r = _regular(spec.remainder, "H - v")
        fc = pocket_charpoly_Q(spec, fast_path=False)
        base = graph_spectrum(spec.remainder, "Q")
        base.remove(2 * r)
        base = base.shifted(1)
        pole = Poly.linear_root(1 + 2 * r)
    elif kind == "Q-edge":
        r = _regular(spec.remainder, "H - {u, v}")
        fc = edge_pocket_charpoly_Q(spec, fast_path=False)
        base = graph_spectrum(spec.remainder, "Q")
        base.remove(2 * r)
        base = base.shifted(2)
        pole = Poly.linear_root(2 + 2 * r)
    else:
        raise InvalidParameter(f"kind must be one of {INHERIT_KINDS}")
    res = RatFunc(pole**spec.k) * fc.residual
    if not res.is_polynomial():
        raise PreconditionViolation("residual did not clear to a polynomial")
    inherited = base.times(spec.k) if base.total else SpectrumMultiset()
    return inherited, res.as_poly()


# -- closed forms for matching and cycle edge-pockets -------------------------


def _inherited_from_huv(huv, m: int, r2: int) -> SpectrumMultiset:
    if isinstance(huv, Graph):
        if huv.order != m - 2 or huv.regularity() != r2:
            raise PreconditionViolation("H - {u, v} does not match m and r2")
        huv = huv_spectrum_Q(huv)
    if huv.total != m:
        raise PreconditionViolation(f"pocket spectrum must have {m} values")
    out = huv.copy()
    s = 2 * r2 + 2
    out.remove(m - 2)
    for z in quadratic_roots(1, -(s + m), s * m - 2 * (m - 2)):
        out.remove(z)
    return out


def _check_edge_params(m: int, r2: int) -> None:
    if r2 < 2:
        raise InvalidParameter("r2 must be at least 2")
    if m < r2 + 3:
        raise InvalidParameter("H - {u, v} needs at least r2 + 1 vertices")


def matching_pocket_spectrum_Q(k: int, m: int, r2: int, huv) -> SpectrumMultiset:
    """Q-spectrum of G[K_2k, perfect matching, H_uv].

    ``huv`` is either the Q-spectrum of the pocket graph ``K_2 v H2`` or
    ``H2`` itself.
    """
    if k < 1:
        raise InvalidParameter("k must be at least 1")
    _check_edge_params(m, r2)
    out = _inherited_from_huv(huv, m, r2).times(k)
    s = 2 * r2 + 2
    out.add(m + 2 * k - 4, k)
    for a, mult in ((m + 4 * k - 4, 1), (m + 2 * k - 4, k - 1)):
        if mult:
            for z in quadratic_roots(1, -(a + s), a * s - 2 * (m - 2)):
                out.add(z, mult)
    return out


def cos_term(l: int, n: int):
    """``2 (1 + cos(2 pi l / n))``: exact integer when the cosine is rational."""
    d = n // gcd(l, n)
    exact = {1: 4, 2: 0, 3: 1, 4: 2, 6: 3}
    if d in exact:
        return exact[d]
    return 2 * (1 + MP.cos(2 * MP.pi * l / n))


def cycle_pocket_spectrum_Q(n: int, m: int, r2: int, huv) -> SpectrumMultiset:
    """Q-spectrum of G[K_n, Hamilton cycle, H_uv]."""
    if n < 3:
        raise InvalidParameter("n must be at least 3")
    _check_edge_params(m, r2)
    out = _inherited_from_huv(huv, m, r2).times(n)
    s = 2 * r2 + 2
    a = 2 * m + 2 * n - 6
    for z in quadratic_roots(1, -(a + s), a * s - 4 * (m - 2)):
        out.add(z)
    a = 2 * m + n - 6
    for l in range(1, n):
        c = cos_term(l, n)
        if isinstance(c, int):
            for z in quadratic_roots(1, -(a + s), a * s - (m - 2) * c):
                out.add(z)
        else:
            b = a + s
            disc = MP.sqrt(b * b - 4 * (a * s - (m - 2) * c))
            out.add((b + disc) / 2)
            out.add((b - disc) / 2)
    return out


def matching_fixture(k: int, h: Graph) -> EdgePocketSpec:
    """K_2k with edges (0,1), (2,3), ... pasted with ``h`` on edge (0, 1)."""
    return EdgePocketSpec(complete(2 * k), tuple((2 * i, 2 * i + 1) for i in range(k)), h, (0, 1))


def cycle_fixture(n: int, h: Graph) -> EdgePocketSpec:
    """K_n with its Hamilton cycle 0-1-...-(n-1)-0 pasted with ``h``."""
    return EdgePocketSpec(complete(n), tuple((i, (i + 1) % n) for i in range(n)), h, (0, 1))


# -- eigenvector certificates -------------------------------------------------


def _cycle_eigenpairs(p: int) -> list[tuple[object, np.ndarray]]:
    """Eigenpairs of A(C_p) ascending by value, all-ones vector last."""
    idx = np.arange(p)
    pairs = []
    for j in range(1, p // 2 + 1):
        val = cos_term(j, p) - 2
        ang = 2 * np.pi * j * idx / p
        pairs.append((val, np.cos(ang)))
        if 2 * j != p:
            pairs.append((val, np.sin(ang)))
    pairs.sort(key=lambda t: float(t[0]))
    pairs.append((2, np.ones(p)))
    return pairs


def _complete_eigenpairs(q: int) -> list[tuple[int, np.ndarray]]:
    pairs = []
    for j in range(1, q):
        y = np.zeros(q)
        y[0], y[j] = 1.0, -1.0
        pairs.append((-1, y))
    pairs.append((q - 1, np.ones(q)))
    return pairs


@dataclass
class EigenvectorCertificate:
    eigenvalue: object
    vector: np.ndarray
    block: int
    s: int
    t: int
    context: dict
    residual: float = 0.0


def pocket_eigenvector_certificates(kind: str, spec, p: int, r: int, s: int, t: int) -> list[EigenvectorCertificate]:
    """One certificate per pocket copy for the pocket remainder ``C_p x K_{r-1}``.

    ``s`` in 1..p and ``t`` in 1..r-1 index the ascending eigenvectors of
    C_p and K_{r-1}; ``(p, r-1)`` is the all-ones pair and is rejected.
    """
    if p < 3 or r < 2:
        raise InvalidParameter("need p >= 3 and r >= 2")
    q = r - 1
    if not (1 <= s <= p and 1 <= t <= q):
        raise InvalidParameter("s or t out of range")
    if (s, t) == (p, q):
        raise ExcludedEigenvector("the all-ones vector is not a pocket eigenvector")
    target = cartesian_product(cycle(p), complete(q))
    if spec.remainder != target:
        raise PreconditionViolation(f"pocket remainder is not C_{p} x K_{q} in product order")
    lam_s, xs = _cycle_eigenpairs(p)[s - 1]
    lam_t, yt = _complete_eigenpairs(q)[t - 1]
    if isinstance(spec, VertexPocketSpec):
        if not _full_degree(spec.H, spec.v):
            raise PreconditionViolation("specified vertex must have degree m - 1")
        shift = {"A": 0, "Q": 1}[kind]
    else:
        if kind != "Q":
            raise InvalidParameter("edge-pocket certificates exist for Q only")
        shift = 2
    if kind == "A":
        value = lam_s + lam_t
    else:
        value = (lam_s + 2) + (lam_t + q - 1) + shift
    if not isinstance(value, int):
        value = MP.mpf(value)
    g = build(spec)
    mat = matrix_of(g, kind)
    local = np.kron(xs, yt)
    step = local.size
    certs = []
    for i in range(spec.k):
        vec = np.zeros(g.order)
        off = spec.n + i * step
        vec[off : off + step] = local
        ctx = {"matrix": kind, "order": g.order, "pocket": "vertex" if shift < 2 else "edge"}
        certs.append(EigenvectorCertificate(value, vec, i, s, t, ctx, residual(mat, vec, float(value))))
    return certs


def certificate_rank(certs: list[EigenvectorCertificate]) -> int:
    if not certs:
        return 0
    return int(np.linalg.matrix_rank(np.stack([c.vector for c in certs])))


def certificate_pairs(p: int, r: int) -> list[tuple[int, int]]:
    """All admissible ``(s, t)``."""
    return [(s, t) for s in range(1, p + 1) for t in range(1, r) if (s, t) != (p, r - 1)]


__all__ = [
    "FactoredCharpoly",
    "EigenvectorCertificate",
    "join_charpoly_A",
    "join_charpoly_Q",
    "hv_spectrum_A",
    "hv_spectrum_Q",
    "huv_spectrum_Q",
    "pocket_charpoly_A",
    "pocket_charpoly_Q",
    "edge_pocket_charpoly_Q",
    "spanning_edge_pocket_charpoly_Q",
    "formula_charpoly",
    "verification_report",
    "inherited_spectrum",
    "matching_pocket_spectrum_Q",
    "cycle_pocket_spectrum_Q",
    "pocket_eigenvector_certificates",
    "certificate_rank",
    "certificate_pairs",
    "graph_charpoly",
    "graph_spectrum",
    "first_diff_coeff",
    "matching_fixture",
    "cycle_fixture",
    "cos_term",
    "build",
]
