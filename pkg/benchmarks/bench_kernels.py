"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the exact characteristic polynomial on the order-36 and order-51
cospectral pocket graphs and Jacobi on a random symmetric 30x30 matrix.
"""
import argparse
import time

import numpy as np

from pocket_spectra import _backend
from pocket_spectra.catalog import rook, shrikhande
from pocket_spectra.graph import complete, join, matrix_of, path
from pocket_spectra.pockets import EdgePocketSpec, VertexPocketSpec, build_edge_pockets, build_vertex_pockets


def _cases():
    k1, k2 = complete(1), complete(2)
    g36 = build_vertex_pockets(VertexPocketSpec(path(4), (0, 1), join(k1, shrikhande()), 0))
    tri = tuple(complete(3).edges())
    g51 = build_edge_pockets(EdgePocketSpec(complete(3), tri, join(k2, rook()), (0, 1)))
    return [("charpoly A, order 36", matrix_of(g36, "A")), ("charpoly Q, order 51", matrix_of(g51, "Q"))]


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _backend._ext is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . --no-build-isolation")
    rows = []
    for name, mat in _cases():
        data = mat.tolist()
        fast = _best(lambda: _backend.charpoly_coeffs(data, "cython"), args.repeat)
        slow = _best(lambda: _backend.charpoly_coeffs(data, "python"), args.repeat)
        assert _backend.charpoly_coeffs(data, "cython") == _backend.charpoly_coeffs(data, "python")
        rows.append((name, fast, slow))
    rng = np.random.default_rng(0)
    m = rng.normal(size=(30, 30))
    m = m + m.T

    def jac(backend):
        a, v = m.copy(), np.eye(30)
        _backend.jacobi_sweeps(a, v, 1e-12, 100, backend)

    rows.append(("Jacobi, n = 30", _best(lambda: jac("cython"), args.repeat), _best(lambda: jac("python"), args.repeat)))
    print(f"{'kernel':<24}{'cython s':>12}{'python s':>12}{'speedup':>10}")
    for name, fast, slow in rows:
        print(f"{name:<24}{fast:>12.4f}{slow:>12.4f}{slow / fast:>9.1f}x")


if __name__ == "__main__":
    main()
