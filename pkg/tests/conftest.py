from pathlib import Path

import networkx as nx
import numpy as np
import pytest
import sympy

from pocket_spectra import graph6
from pocket_spectra.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"
X = sympy.Symbol("x")


def sympy_charpoly(m) -> list[int]:
    """Ascending coefficients of det(xI - M) computed by sympy."""
    coeffs = sympy.Matrix(np.asarray(m).tolist()).charpoly(X).all_coeffs()
    return [int(c) for c in reversed(coeffs)]


def to_nx(g: Graph) -> nx.Graph:
    return nx.from_numpy_array(np.asarray(g.adjacency))


def from_nx(h: nx.Graph) -> Graph:
    return Graph(nx.to_numpy_array(h, nodelist=sorted(h), dtype=np.uint8))


def regular_7_8() -> list[Graph]:
    return [graph6.decode(ln) for ln in (FIXTURES / "regular_7_8.g6").read_text().split()]


# One summary line per acceptance criterion, after the normal pytest output.
_CRITERIA: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, [title, "PASS"])
    if rep.failed or (rep.when == "call" and rep.skipped):
        entry[1] = "FAIL" if rep.failed else "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
