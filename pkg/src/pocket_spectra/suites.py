"""Randomized and fixture-driven verification suites.

Instances are generated serially from one seeded generator, evaluated on a
thread pool, and reported in instance order, so a report depends only on
the suite parameters.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import formulas as fm
from .catalog import regular_graphs
from .errors import PocketSpectraError
from .graph import (
    Graph,
    cartesian_product,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    join,
    matrix_of,
    path,
    random_graph,
)
from .numeric import default_tol, eig_sym, spectra_match
from .pockets import EdgePocketSpec, VertexPocketSpec
from .spectrum import compare_spectra, to_mpf


@dataclass
class InstanceResult:
    index: int
    passed: bool
    detail: dict
    deviation: float | None = None

    def to_json(self) -> dict:
        out = {"index": self.index, "passed": self.passed}
        if self.deviation is not None:
            out["deviation"] = self.deviation
        out.update(self.detail)
        return out


@dataclass
class SuiteReport:
    suite: str
    params: dict
    instances: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.instances)

    @property
    def ok(self) -> bool:
        return bool(self.instances) and self.passed == len(self.instances)

    @property
    def max_deviation(self) -> float | None:
        devs = [r.deviation for r in self.instances if r.deviation is not None]
        return max(devs) if devs else None

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "total": len(self.instances),
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "instances": [r.to_json() for r in self.instances],
        }


# -- random spec generators ----------------------------------------------------


def _shuffle_graph(g: Graph, rng: np.random.Generator, keep: tuple[int, ...]) -> tuple[Graph, tuple[int, ...]]:
    """Random relabeling; returns the new graph and the new names of ``keep``."""
    perm = [int(x) for x in rng.permutation(g.order)]
    return g.relabel(perm), tuple(perm[w] for w in keep)


def random_vertex_spec(rng: np.random.Generator, max_n: int = 7, max_m: int = 6) -> VertexPocketSpec:
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(2, max_m + 1))
    f = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
    h = join(complete(1), random_graph(m - 1, float(rng.uniform(0.0, 1.0)), rng))
    h, (v,) = _shuffle_graph(h, rng, (0,))
    k = int(rng.integers(1, n + 1))
    vk = tuple(int(x) for x in rng.permutation(n)[:k])
    return VertexPocketSpec(f, vk, h, v)


def _regular_edge_pattern(rng: np.random.Generator, n: int, spanning: bool) -> list[tuple[int, int]]:
    """Edges of a regular subgraph on a random vertex subset of ``range(n)``."""
    choices = []
    for p in range(2, n + 1):
        if spanning and p != n:
            continue
        if p % 2 == 0:
            choices.append(("matching", p))
        if p >= 3:
            choices.append(("cycle", p))
            choices.append(("complete", p))
    kind, p = choices[int(rng.integers(len(choices)))]
    verts = [int(x) for x in rng.permutation(n)[:p]]
    if kind == "matching":
        return [(verts[2 * i], verts[2 * i + 1]) for i in range(p // 2)]
    if kind == "cycle":
        return [(verts[i], verts[(i + 1) % p]) for i in range(p)]
    return [(verts[i], verts[j]) for i in range(p) for j in range(i + 1, p)]


MAX_ASSEMBLED = 64


def random_edge_spec(rng: np.random.Generator, max_n: int = 7, max_m: int = 6,
                     spanning: bool = False) -> EdgePocketSpec:
    n = int(rng.integers(2, max_n + 1))
    m = int(rng.integers(3, max_m + 1))
    ek = _regular_edge_pattern(rng, n, spanning)
    m = min(m, 2 + (MAX_ASSEMBLED - n) // len(ek))
    base = random_graph(n, float(rng.uniform(0.1, 0.7)), rng).adjacency.copy()
    for a, b in ek:
        base[a, b] = base[b, a] = 1
    f = Graph(base)
    order = rng.permutation(len(ek))
    ek = [ek[i] for i in order]
    h = join(complete(2), random_graph(m - 2, float(rng.uniform(0.0, 1.0)), rng))
    h, uv = _shuffle_graph(h, rng, (0, 1))
    flip = frozenset(i for i in range(len(ek)) if rng.random() < 0.3)
    return EdgePocketSpec(f, tuple(ek), h, uv, flip)


def _regular_pool() -> list[Graph]:
    extra = [cycle(7), disjoint_union(cycle(3), cycle(4)), complete(7), empty(7)]
    extra += [complement(cycle(7)), complement(disjoint_union(cycle(3), cycle(4)))]
    return regular_graphs(6) + extra


# -- suites ----------------------------------------------------------------------


def _charpoly_check(spec, kind: str, fn) -> tuple[bool, dict]:
    fc = fn(spec)
    rep = fm.verification_report(spec, kind, fc)
    ok = rep["equal"] and fc.check()
    detail = {"equal": rep["equal"], "degree": fc.expanded.degree}
    if not ok:
        detail.update(rep)
    return ok, detail


def _prop(kind: str, fn, gen):
    def build(rng, count, params):
        return [gen(rng) for _ in range(count)]

    def run(spec, params):
        return _charpoly_check(spec, kind, fn)

    return build, run


def _fixture_specs_prop41() -> list[EdgePocketSpec]:
    hosts = [
        (complete(4), [(0, 1), (2, 3)]),
        (complete(6), [(0, 1), (2, 3), (4, 5)]),
        (complete(3), [(0, 1), (1, 2), (0, 2)]),
        (complete(4), [(0, 1), (1, 2), (2, 3), (0, 3)]),
        (cycle(5), cycle(5).edges()),
    ]
    pockets = [complete(5), join(complete(2), cycle(4))]
    return [EdgePocketSpec(f, tuple(ek), h, (0, 1)) for f, ek in hosts for h in pockets]


def _fixture_prop41_run(spec, params):
    ok, detail = _charpoly_check(spec, "Q", fm.edge_pocket_charpoly_Q)
    sub = spec.subgraph
    if sub.p == spec.n:
        other = fm.spanning_edge_pocket_charpoly_Q(spec)
        same = other.expanded == fm.edge_pocket_charpoly_Q(spec).expanded
        detail["spanning_form_identical"] = same
        ok = ok and same
    return ok, detail


def _eq16_build(rng, count, params):
    fixtures = [s for s in _fixture_specs_prop41() if s.subgraph.p == s.n]
    return fixtures + [random_edge_spec(rng, spanning=True) for _ in range(count)]


def _eq16_run(spec, params):
    ok, detail = _charpoly_check(spec, "Q", fm.spanning_edge_pocket_charpoly_Q)
    same = fm.spanning_edge_pocket_charpoly_Q(spec).residual == fm.edge_pocket_charpoly_Q(spec).residual
    detail["residuals_identical"] = same
    return ok and same, detail


def _join_build(rng, count, params):
    pool = _regular_pool()
    return [(pool[int(rng.integers(len(pool)))], pool[int(rng.integers(len(pool)))]) for _ in range(count)]


def _join_run_for(kind):
    fn = fm.join_charpoly_A if kind == "A" else fm.join_charpoly_Q

    def run(pair, params):
        g1, g2 = pair
        got = fn(g1, g2)
        direct = fm.graph_charpoly(join(g1, g2), kind)
        detail = {"orders": [g1.order, g2.order], "degrees": [g1.regularity(), g2.regularity()],
                  "equal": got == direct}
        if got != direct:
            detail["first_diff_coeff"] = fm.first_diff_coeff(got, direct)
        return got == direct, detail

    return run


def _eq123_build(rng, count, params):
    max_order = params.get("max_order", 6)
    out = []
    for g in regular_graphs(max_order):
        out += [("A-vertex", g), ("Q-vertex", g), ("Q-edge", g)]
    return out


def _eq123_run(item, params):
    kind, h = item
    tol = params["tol"]
    if kind == "A-vertex":
        formula, direct = fm.hv_spectrum_A(h), fm.graph_spectrum(join(complete(1), h), "A")
    elif kind == "Q-vertex":
        formula, direct = fm.hv_spectrum_Q(h), fm.graph_spectrum(join(complete(1), h), "Q")
    else:
        formula, direct = fm.huv_spectrum_Q(h), fm.graph_spectrum(join(complete(2), h), "Q")
    ok, dev, exact = compare_spectra(formula, direct, tol)
    exact_both = formula.is_fully_exact() and direct.is_fully_exact()
    if exact_both:
        ok = formula == direct
    detail = {"kind": kind, "pocket_remainder_order": h.order, "degree": h.regularity(),
              "exact": exact_both}
    return ok, detail, dev


def _closed_form_check(spec, closed, tol) -> tuple[bool, dict, float]:
    g = fm.build(spec)
    q = matrix_of(g, "Q")
    num = eig_sym(q)
    match, dev = spectra_match(closed, num, tol)
    trace = int(np.trace(q))
    exact_sum = closed.exact_sum() if closed.is_fully_exact() else None
    numeric_sum = float(sum(to_mpf(v) * k for v, k in closed.entries()))
    sum_ok = exact_sum == trace if exact_sum is not None else abs(numeric_sum - trace) <= tol * max(1, trace)
    poly_ok = fm.edge_pocket_charpoly_Q(spec).expanded == fm.graph_charpoly(g, "Q")
    detail = {
        "order": g.order,
        "closed_form": closed.to_json(),
        "trace": trace,
        "sum": str(exact_sum) if exact_sum is not None else numeric_sum,
        "sum_matches_trace": sum_ok,
        "charpoly_identity": poly_ok,
    }
    return match and sum_ok and poly_ok, detail, dev


def _pocket_from_params(params, default_m):
    h = params.get("H")
    if h is None:
        h = complete(params.get("m") or default_m)
    return h


def _thm45_build(rng, count, params):
    h = _pocket_from_params(params, 5)
    ks = [params["k"]] if params.get("k") else [2, 1, 3]
    return [(k, h) for k in ks]


def _thm45_run(item, params):
    k, h = item
    spec = fm.matching_fixture(k, h)
    h2 = spec.remainder
    closed = fm.matching_pocket_spectrum_Q(k, h.order, h2.regularity(), h2)
    ok, detail, dev = _closed_form_check(spec, closed, params["tol"])
    detail.update({"k": k, "m": h.order})
    return ok, detail, dev


def _thm46_build(rng, count, params):
    h = _pocket_from_params(params, 5)
    ns = [params["n"]] if params.get("n") else [3, 4, 5, 6]
    return [(n, h) for n in ns]


def _thm46_run(item, params):
    n, h = item
    spec = fm.cycle_fixture(n, h)
    h2 = spec.remainder
    closed = fm.cycle_pocket_spectrum_Q(n, h.order, h2.regularity(), h2)
    ok, detail, dev = _closed_form_check(spec, closed, params["tol"])
    detail.update({"n": n, "m": h.order})
    return ok, detail, dev


INHERIT_VERTEX_HOSTS = [(cycle(4), (0, 1)), (path(4), (0, 2, 3)), (complete(3), (0, 1, 2))]
INHERIT_EDGE_HOSTS = [
    (complete(4), ((0, 1), (2, 3))),
    (cycle(4), ((0, 1), (2, 3))),
    (complete(3), ((0, 1), (1, 2), (0, 2))),
]
INHERIT_REMAINDERS = (cycle(6), disjoint_union(complete(3), complete(3)))


def inherit_specs(kind: str, f: Graph, where) -> list:
    if kind == "Q-edge":
        return [EdgePocketSpec(f, where, join(complete(2), h), (0, 1)) for h in INHERIT_REMAINDERS]
    return [VertexPocketSpec(f, where, join(complete(1), h), 0) for h in INHERIT_REMAINDERS]


def _inherit_build(rng, count, params):
    kinds = [params["kind"]] if params.get("kind") else list(fm.INHERIT_KINDS)
    out = []
    for kind in kinds:
        hosts = INHERIT_EDGE_HOSTS if kind == "Q-edge" else INHERIT_VERTEX_HOSTS
        out += [(kind, f, where) for f, where in hosts]
    return out


def inherited_multiplicity_check(spec, kind, inherited, tol):
    """Each inherited value must occur at least as often numerically."""
    mat = matrix_of(fm.build(spec), "A" if kind == "A-vertex" else "Q")
    values = np.array(eig_sym(mat).values)
    coincidences = []
    ok = True
    for val, mult in inherited.entries():
        seen = int(np.sum(np.abs(values - float(to_mpf(val))) <= tol * 1e3))
        if seen < mult:
            ok = False
        elif seen > mult:
            coincidences.append({"value": str(val), "inherited": mult, "numeric": seen})
    return ok, coincidences


def _inherit_run(item, params):
    kind, f, where = item
    specs = inherit_specs(kind, f, where)
    polys, mult_ok, notes = [], True, []
    for spec in specs:
        inherited, res = fm.inherited_spectrum(kind, spec)
        polys.append(res)
        ok, co = inherited_multiplicity_check(spec, kind, inherited, params["tol"])
        mult_ok = mult_ok and ok
        notes += co
    same = all(p == polys[0] for p in polys)
    detail = {"kind": kind, "host_order": f.order, "k": specs[0].k, "residual_poly": polys[0].to_json(),
              "residuals_identical": same, "multiplicity_at_least_k": mult_ok, "coincidences": notes}
    return same and mult_ok, detail


EIGVEC_REMAINDERS = [(3, 2), (4, 3), (3, 3)]


def _eigvec_build(rng, count, params):
    out = []
    for p, r in EIGVEC_REMAINDERS:
        g = cartesian_product(cycle(p), complete(r - 1))
        vspec = VertexPocketSpec(path(4), (0, 1), join(complete(1), g), 0)
        espec = EdgePocketSpec(complete(4), ((0, 1), (2, 3)), join(complete(2), g), (0, 1))
        out += [("A", vspec, p, r), ("Q", vspec, p, r), ("Q", espec, p, r)]
    return out


def _eigvec_run(item, params):
    kind, spec, p, r = item
    worst, rank_ok, count = 0.0, True, 0
    for s, t in fm.certificate_pairs(p, r):
        certs = fm.pocket_eigenvector_certificates(kind, spec, p, r, s, t)
        worst = max(worst, max(c.residual for c in certs))
        rank_ok = rank_ok and fm.certificate_rank(certs) == spec.k
        count += len(certs)
    pocket = "vertex" if isinstance(spec, VertexPocketSpec) else "edge"
    detail = {"matrix": kind, "pocket": pocket, "p": p, "r": r, "certificates": count, "rank_k": rank_ok}
    return worst <= 1e-9 and rank_ok, detail, worst


SUITES = {
    "prop31": _prop("A", fm.pocket_charpoly_A, random_vertex_spec),
    "prop35": _prop("Q", fm.pocket_charpoly_Q, random_vertex_spec),
    "prop41": (
        lambda rng, count, params: _fixture_specs_prop41() + [random_edge_spec(rng) for _ in range(count)],
        _fixture_prop41_run,
    ),
    "eq16": (_eq16_build, _eq16_run),
    "thm21": (_join_build, _join_run_for("A")),
    "thm22": (_join_build, _join_run_for("Q")),
    "eq123": (_eq123_build, _eq123_run),
    "thm45": (_thm45_build, _thm45_run),
    "thm46": (_thm46_build, _thm46_run),
    "inherit": (_inherit_build, _inherit_run),
    "eigvec": (_eigvec_build, _eigvec_run),
}
DEFAULT_COUNTS = {"prop31": 50, "prop35": 50, "prop41": 20, "eq16": 10, "thm21": 20, "thm22": 20}


def _describe(item):
    if isinstance(item, (VertexPocketSpec, EdgePocketSpec)):
        return {"spec": item.to_json()}
    return {}


def run_suite(name: str, seed: int = 0, count: int | None = None, tol: float | None = None,
              workers: int | None = None, **params) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    tol = default_tol() if tol is None else tol
    count = DEFAULT_COUNTS.get(name, 0) if count is None else count
    build, run = SUITES[name]
    rng = np.random.default_rng(seed)
    params = {k: v for k, v in params.items() if v is not None}
    items = build(rng, count, dict(params, tol=tol))
    run_params = dict(params, tol=tol)

    def evaluate(pair):
        idx, item = pair
        try:
            out = run(item, run_params)
        except PocketSpectraError as exc:
            return InstanceResult(idx, False, {"error": f"{type(exc).__name__}: {exc}", **_describe(item)})
        ok, detail, *dev = out
        if not ok:
            detail = {**detail, **_describe(item)}
        return InstanceResult(idx, bool(ok), detail, float(dev[0]) if dev else None)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(evaluate, enumerate(items)))
    shown = {k: (v if isinstance(v, (int, float, str)) else str(v)) for k, v in params.items()}
    report = SuiteReport(name, {"seed": seed, "count": count, "tol": tol, **shown}, results)
    return report
