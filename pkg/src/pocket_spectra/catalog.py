"""Bundled graphs and the small graph-expression language used by the CLI.

Expressions::

    K5  C6  P3  E4  K2,3         complete, cycle, path, empty, complete bipartite
    shrikhande  rook             the two order-16 strongly regular seeds
    2K3                          disjoint copies
    K1 v C4   C3 u K1   C4 x K2  join, disjoint union, Cartesian product
    ( ... )                      grouping; operators associate to the left
    g6:<string>  or a file path  graph6 literal / first graph of a file
"""
from __future__ import annotations

import os
import re
from functools import lru_cache
from importlib import resources

from . import graph6
from .errors import InvalidInput
from .graph import (
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
)

# Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)},
# vertex (a, b) -> 4a + b.
SHRIKHANDE_G6 = "OlfJHsHBGK_\\oHWKeBK_\\"
# K4 x K4 (Cartesian), vertex (a, b) -> 4a + b.
ROOK_G6 = "O~`HW}GPHDaNaGPCcPWaN"


def shrikhande() -> Graph:
    return graph6.decode(SHRIKHANDE_G6)


def rook() -> Graph:
    return graph6.decode(ROOK_G6)


NAMED = {"shrikhande": shrikhande, "rook": rook}


@lru_cache(maxsize=None)
def small_graphs() -> tuple[Graph, ...]:
    """Every graph on 1..6 vertices (208 graphs), by order then edge count."""
    text = resources.files("pocket_spectra").joinpath("data/small_graphs.g6").read_text()
    return tuple(graph6.decode(line) for line in text.split())


def small_graph_lines(order: int | None = None) -> list[str]:
    text = resources.files("pocket_spectra").joinpath("data/small_graphs.g6").read_text()
    lines = text.split()
    if order is None:
        return lines
    return [ln for ln in lines if graph6.decode(ln).order == order]


def graphs_of_order(n: int) -> list[Graph]:
    return [g for g in small_graphs() if g.order == n]


def regular_graphs(max_order: int = 6, min_order: int = 1) -> list[Graph]:
    return [g for g in small_graphs() if min_order <= g.order <= max_order and g.is_regular()]


_TOKEN = re.compile(
    r"\s*(?:(?P<lp>\()|(?P<rp>\))|(?P<op>[vux])|"
    r"(?P<mult>\d+)?(?P<atom>K\d+,\d+|[KCPE]\d+|shrikhande|rook))"
)


def _atom(text: str) -> Graph:
    if text in NAMED:
        return NAMED[text]()
    kind, rest = text[0], text[1:]
    if kind == "K" and "," in rest:
        a, b = rest.split(",")
        return complete_bipartite(int(a), int(b))
    size = int(rest)
    return {"K": complete, "C": cycle, "P": path, "E": empty}[kind](size)


def _tokenize(expr: str) -> list[tuple[str, object]]:
    out, pos = [], 0
    expr = expr.rstrip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise InvalidInput(f"cannot parse graph expression {expr!r} at offset {pos}")
        pos = m.end()
        if m.group("lp"):
            out.append(("(", None))
        elif m.group("rp"):
            out.append((")", None))
        elif m.group("op"):
            out.append(("op", m.group("op")))
        else:
            g = _atom(m.group("atom"))
            times = int(m.group("mult") or 1)
            if times < 1:
                raise InvalidInput("multiplier must be positive")
            acc = g
            for _ in range(times - 1):
                acc = disjoint_union(acc, g)
            out.append(("g", acc))
    return out


_OPS = {"v": join, "u": disjoint_union, "x": cartesian_product}


def _parse(tokens, i):
    left, i = _primary(tokens, i)
    while i < len(tokens) and tokens[i][0] == "op":
        op = tokens[i][1]
        right, i = _primary(tokens, i + 1)
        left = _OPS[op](left, right)
    return left, i


def _primary(tokens, i):
    if i >= len(tokens):
        raise InvalidInput("graph expression ended early")
    kind, val = tokens[i]
    if kind == "g":
        return val, i + 1
    if kind == "(":
        g, i = _parse(tokens, i + 1)
        if i >= len(tokens) or tokens[i][0] != ")":
            raise InvalidInput("unbalanced parentheses in graph expression")
        return g, i + 1
    raise InvalidInput(f"unexpected {kind!r} in graph expression")


def parse_graph(expr: str) -> Graph:
    """Graph from an expression, a ``g6:`` literal or a graph6 file path."""
    expr = expr.strip()
    if expr.startswith("g6:"):
        return graph6.decode(expr[3:])
    if os.path.isfile(expr):
        with open(expr) as fh:
            for _, item in graph6.iter_graph6(fh):
                if isinstance(item, Exception):
                    raise item
                return item
        raise InvalidInput(f"{expr} holds no graph")
    tokens = _tokenize(expr)
    g, i = _parse(tokens, 0)
    if i != len(tokens):
        raise InvalidInput(f"trailing input in graph expression {expr!r}")
    return g


def split_graph_list(text: str) -> list[str]:
    """Split ``"shrikhande,rook"`` on commas that do not belong to ``K<a>,<b>``."""
    return [p for p in re.split(r",(?!\d)", text) if p.strip()]
