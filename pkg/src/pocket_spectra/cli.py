"""``pocket-spectra`` command line.

Every command prints one JSON report on stdout (``spectrum --csv`` prints
a table instead).  Exit codes: 0 all checks pass, 1 mathematical mismatch,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__, graph6, numeric
from .catalog import parse_graph, split_graph_list
from .cospectral import (
    make_cospectral_edge_pocket_pair,
    make_cospectral_vertex_pocket_pair,
    search_cospectral_mates,
    verify_cospectral,
)
from .errors import PocketSpectraError
from .formulas import first_diff_coeff, formula_charpoly, graph_charpoly, graph_spectrum
from .graph import Graph, matrix_of, parse_edge_list
from .pockets import (
    EdgePocketSpec,
    VertexPocketSpec,
    build_edge_pockets,
    build_vertex_pockets,
    corona,
    edge_corona,
    spec_from_json,
    validate,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"expected integers, got {text!r}") from exc


def _edge(text: str) -> tuple[int, int]:
    edges = parse_edge_list(text)
    if len(edges) != 1:
        raise UsageError(f"expected a single edge like 0-1, got {text!r}")
    return edges[0]


def _graph_stats(g: Graph) -> dict:
    return {"graph6": graph6.encode(g), "order": g.order, "size": g.size,
            "degree_sequence": list(g.degree_sequence())}


# -- spec handling -------------------------------------------------------------


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--vertex-pockets", action="store_true", help="G[F, V_k, H_v]")
    mode.add_argument("--edge-pockets", action="store_true", help="G[F, E_k, H_uv]")
    mode.add_argument("--corona", action="store_true", help="F o H")
    mode.add_argument("--edge-corona", action="store_true", help="F <> H")
    p.add_argument("--spec", metavar="FILE", help="JSON spec file (graph6 payloads)")
    p.add_argument("-F", dest="F", help="host graph expression")
    p.add_argument("-H", dest="H", help="pocket graph expression")
    p.add_argument("-Vk", "--Vk", dest="Vk", help="pocket vertices of F, e.g. 0,2")
    p.add_argument("-v", dest="v", type=int, help="specified vertex of H")
    p.add_argument("-Ek", "--Ek", dest="Ek", help="pasted edges of F, e.g. 0-1,2-3")
    p.add_argument("-uv", "--uv", dest="uv", help="specified edge of H, e.g. 0-1")
    p.add_argument("--flip", help="indices of E_k edges pasted with reversed orientation")


def _spec_requested(a) -> bool:
    return bool(a.spec or a.vertex_pockets or a.edge_pockets or a.corona or a.edge_corona)


def _need(a, *names):
    missing = [n for n in names if getattr(a, n) in (None, "")]
    if missing:
        raise UsageError("missing " + ", ".join("-" + n for n in missing))


def _spec_from_args(a):
    """``(spec or None, graph)``; corona forms have no spec of their own."""
    if a.spec:
        with open(a.spec) as fh:
            spec = spec_from_json(json.load(fh))
    elif a.vertex_pockets:
        _need(a, "F", "H", "Vk", "v")
        spec = VertexPocketSpec(parse_graph(a.F), _ints(a.Vk), parse_graph(a.H), a.v)
    elif a.edge_pockets:
        _need(a, "F", "H", "Ek", "uv")
        flip = frozenset(_ints(a.flip)) if a.flip else frozenset()
        spec = EdgePocketSpec(parse_graph(a.F), tuple(parse_edge_list(a.Ek)), parse_graph(a.H), _edge(a.uv), flip)
    elif a.corona:
        _need(a, "F", "H")
        return None, corona(parse_graph(a.F), parse_graph(a.H))
    elif a.edge_corona:
        _need(a, "F", "H")
        return None, edge_corona(parse_graph(a.F), parse_graph(a.H))
    else:
        raise UsageError("choose --vertex-pockets, --edge-pockets, --corona, --edge-corona or --spec")
    g = build_vertex_pockets(spec) if isinstance(spec, VertexPocketSpec) else build_edge_pockets(spec)
    return spec, g


# -- commands --------------------------------------------------------------------


def cmd_build(a) -> tuple[dict, int]:
    spec, g = _spec_from_args(a)
    inputs = spec.to_json() if spec is not None else {"F": a.F, "H": a.H}
    outputs = _graph_stats(g)
    if spec is not None:
        outputs["assumptions"] = validate(spec).to_json()
    return {"inputs": inputs, "outputs": outputs, "checks": []}, EXIT_OK


def cmd_charpoly(a) -> tuple[dict, int]:
    if a.graph and _spec_requested(a):
        raise UsageError("give either a graph or a pocket spec, not both")
    if a.graph:
        if a.via != "direct":
            raise UsageError("the formula route needs a pocket spec (--vertex-pockets / --edge-pockets / --spec)")
        g = parse_graph(a.graph)
        poly = graph_charpoly(g, a.matrix)
        return {"inputs": {"graph": graph6.encode(g), "matrix": a.matrix},
                "outputs": {"charpoly": poly.to_json(), "text": str(poly)}, "checks": []}, EXIT_OK
    spec, g = _spec_from_args(a)
    inputs = {"matrix": a.matrix, "via": a.via}
    inputs.update(spec.to_json() if spec is not None else {"F": a.F, "H": a.H})
    outputs, checks = {}, []
    if a.via in ("direct", "both"):
        direct = graph_charpoly(g, a.matrix)
        outputs["direct"] = direct.to_json()
    if a.via in ("formula", "both"):
        if spec is None:
            raise UsageError("the formula route needs --vertex-pockets, --edge-pockets or --spec")
        fc = formula_charpoly(spec, a.matrix, fast_path=True if a.fast_path else None)
        outputs["formula"] = fc.expanded.to_json()
        outputs["factored"] = fc.to_json()
    if a.via == "both":
        equal = fc.expanded == direct
        checks.append({"name": "formula_equals_direct", "pass": equal,
                       "first_diff_coeff": first_diff_coeff(fc.expanded, direct)})
        code = EXIT_OK if equal else EXIT_MISMATCH
    else:
        code = EXIT_OK
    outputs["text"] = str(fc.expanded if a.via == "formula" else direct)
    return {"inputs": inputs, "outputs": outputs, "checks": checks}, code


def cmd_spectrum(a) -> tuple[dict | None, int]:
    g = parse_graph(a.graph)
    spec = graph_spectrum(g, a.matrix)
    num = numeric.eig_sym(matrix_of(g, a.matrix), max_sweeps=a.max_sweeps)
    match, dev = numeric.spectra_match(spec, num, a.tol)
    if a.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["value", "multiplicity", "approx"])
        for item in spec.to_json():
            w.writerow([item["value"], item["multiplicity"], repr(item["approx"])])
        return None, EXIT_OK if match else EXIT_MISMATCH
    report = {
        "inputs": {"graph": graph6.encode(g), "matrix": a.matrix},
        "outputs": {"spectrum": spec.to_json(), "numeric": list(num.values)},
        "checks": [{"name": "exact_vs_numeric", "pass": match, "deviation": dev}],
    }
    return report, EXIT_OK if match else EXIT_MISMATCH


def cmd_verify(a) -> tuple[dict, int]:
    params = {"k": a.k, "n": a.n, "m": a.m, "kind": a.kind, "max_order": a.max_order}
    if a.H:
        params["H"] = parse_graph(a.H)
    rep = run_suite(a.suite, seed=a.seed, count=a.count, tol=a.tol, workers=a.workers, **params)
    body = rep.to_json()
    if a.H:
        body["params"]["H"] = a.H
    checks = [{"name": f"{a.suite}[{r['index']}]", "pass": r["passed"], "deviation": r.get("deviation")}
              for r in body["instances"]]
    out = {"inputs": body["params"], "outputs": {"total": body["total"], "passed": body["passed"],
                                                  "max_deviation": body["max_deviation"],
                                                  "instances": body["instances"]},
           "checks": checks}
    return out, EXIT_OK if rep.ok else EXIT_MISMATCH


def _cert_check(res) -> dict:
    return {"name": "cospectral", "pass": res.ok}


def cmd_cospectral(a) -> tuple[dict, int]:
    if a.action == "check":
        g1, g2 = parse_graph(a.g1), parse_graph(a.g2)
        res = verify_cospectral(g1, g2, a.kind)
        inputs = {"g1": graph6.encode(g1), "g2": graph6.encode(g2), "kind": a.kind}
        return {"inputs": inputs, "outputs": res.to_json(), "checks": [_cert_check(res)]}, (
            EXIT_OK if res.ok else EXIT_MISMATCH)
    if a.action == "construct":
        seeds = split_graph_list(a.seeds)
        if len(seeds) != 2:
            raise UsageError("--seeds needs exactly two graphs")
        s1, s2 = (parse_graph(s) for s in seeds)
        f = parse_graph(a.F)
        if a.Ek:
            ek = parse_edge_list(a.Ek)
            g1, g2, res = make_cospectral_edge_pocket_pair(f, ek, s1, s2)
            inputs = {"seeds": seeds, "F": a.F, "Ek": [list(e) for e in ek], "kind": "Q"}
        elif a.Vk:
            g1, g2, res = make_cospectral_vertex_pocket_pair(f, _ints(a.Vk), s1, s2, a.kind)
            inputs = {"seeds": seeds, "F": a.F, "Vk": list(_ints(a.Vk)), "kind": a.kind}
        else:
            raise UsageError("construct needs --Vk or --Ek")
        outputs = {"g1": _graph_stats(g1), "g2": _graph_stats(g2), "certificate": res.to_json()}
        return {"inputs": inputs, "outputs": outputs, "checks": [_cert_check(res)]}, (
            EXIT_OK if res.ok else EXIT_MISMATCH)
    if a.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(a.input) as fh:
            lines = fh.read().splitlines()
    res = search_cospectral_mates(lines, a.kind, a.regular, a.workers)
    inputs = {"in": a.input or "-", "kind": a.kind, "require_regular": a.regular}
    checks = [{"name": f"pair[{c['line1']},{c['line2']}]", "pass": True} for c in res.to_json()["pairs"]]
    return {"inputs": inputs, "outputs": res.to_json(), "checks": checks}, EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="spectrum comparison tolerance (default 1e-9 or $POCKET_SPECTRA_TOL)")
    common.add_argument("--max-sweeps", type=int, default=numeric.DEFAULT_MAX_SWEEPS,
                        help="Jacobi sweep limit")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=None, help="thread count for suites and search")
    common.add_argument("--stable", action="store_true", help="omit wall_time_ms so reports are byte-stable")

    p = argparse.ArgumentParser(prog="pocket-spectra", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="assemble a pocket graph")
    _add_spec_flags(b)
    b.add_argument("--g6", action="store_true", help="print only the graph6 line")

    c = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    c.add_argument("graph", nargs="?", help="graph expression (direct route only)")
    _add_spec_flags(c)
    c.add_argument("--matrix", choices=("A", "Q"), default="A")
    c.add_argument("--via", choices=("direct", "formula", "both"), default="direct")
    c.add_argument("--fast-path", action="store_true",
                   help="force the constant-row-sum coronal (needs a regular pocket remainder)")

    s = sub.add_parser("spectrum", parents=[common], help="exact spectrum with numeric cross-check")
    s.add_argument("graph")
    s.add_argument("--matrix", choices=("A", "Q"), default="A")
    s.add_argument("--csv", action="store_true", help="print a value,multiplicity,approx table")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--count", type=int, default=None)
    v.add_argument("--kind", choices=("A-vertex", "Q-vertex", "Q-edge"), default=None)
    v.add_argument("-n", type=int, default=None, help="host order (thm46)")
    v.add_argument("-m", type=int, default=None, help="pocket order, pocket K_m (thm45/thm46)")
    v.add_argument("-k", type=int, default=None, help="matching size (thm45)")
    v.add_argument("-H", dest="H", default=None, help="pocket graph expression (thm45/thm46)")
    v.add_argument("--max-order", type=int, default=None, help="largest remainder order (eq123)")

    co = sub.add_parser("cospectral", help="cospectral pairs")
    csub = co.add_subparsers(dest="action", required=True)
    ck = csub.add_parser("check", parents=[common])
    ck.add_argument("g1")
    ck.add_argument("g2")
    ck.add_argument("--kind", choices=("A", "Q"), default="A")
    cc = csub.add_parser("construct", parents=[common])
    cc.add_argument("--seeds", required=True, help="two regular cospectral seeds, e.g. shrikhande,rook")
    cc.add_argument("-F", dest="F", required=True)
    cc.add_argument("--Vk", "-Vk", dest="Vk")
    cc.add_argument("--Ek", "-Ek", dest="Ek")
    cc.add_argument("--kind", choices=("A", "Q"), default="A")
    cs = csub.add_parser("search", parents=[common])
    cs.add_argument("--in", dest="input", default=None, help="graph6 file (default stdin)")
    cs.add_argument("--kind", choices=("A", "Q"), default="A")
    cs.add_argument("--regular", action="store_true", help="only co-regular pairs")
    return p


COMMANDS = {"build": cmd_build, "charpoly": cmd_charpoly, "spectrum": cmd_spectrum,
            "verify": cmd_verify, "cospectral": cmd_cospectral}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    tol = args.tol if args.tol is not None else numeric.default_tol()
    args.tol = tol
    numeric.DEFAULT_MAX_SWEEPS = args.max_sweeps
    name = args.command if args.command != "cospectral" else f"cospectral {args.action}"
    start = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args)
    except (UsageError, PocketSpectraError, OSError) as exc:
        _emit({"command": name, "error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_USAGE
    if report is None:
        return code
    if args.command == "build" and args.g6:
        print(report["outputs"]["graph6"])
        return code
    full = {"command": name, **report}
    if not args.stable:
        full["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(full)
    return code


if __name__ == "__main__":
    sys.exit(main())
