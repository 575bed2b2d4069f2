import os
import subprocess
import sys

import numpy as np
import pytest

from pocket_spectra import _backend
from pocket_spectra.catalog import rook, shrikhande
from pocket_spectra.graph import matrix_of

needs_ext = pytest.mark.skipif(_backend._ext is None, reason="compiled kernels not built")


@needs_ext
@pytest.mark.parametrize("seed", range(25))
def test_charpoly_parity(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 20))
    rows = rng.integers(-9, 10, size=(n, n)).tolist()
    assert _backend.charpoly_coeffs(rows, "cython") == _backend.charpoly_coeffs(rows, "python")


@needs_ext
def test_charpoly_parity_on_seed_graphs():
    for g in (shrikhande(), rook()):
        rows = matrix_of(g, "Q").tolist()
        assert _backend.charpoly_coeffs(rows, "cython") == _backend.charpoly_faddeev_py(rows)


@needs_ext
@pytest.mark.parametrize("seed", range(10))
def test_jacobi_parity(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 16))
    m = rng.normal(size=(n, n))
    m = m + m.T
    out = []
    for backend in ("cython", "python"):
        a, v = m.copy(), np.eye(n)
        sweeps = _backend.jacobi_sweeps(a, v, 1e-12, 100, backend)
        assert sweeps >= 0
        out.append((np.sort(np.diag(a)), v))
    assert np.allclose(out[0][0], out[1][0], atol=1e-10)
    assert np.allclose(out[0][1], out[1][1], atol=1e-8)


def test_large_entries_fall_back_to_exact_python():
    rows = [[2**40, 1], [1, -(2**40)]]
    assert _backend.charpoly_coeffs(rows) == [-(2**80) - 1, 0, 1]


def test_pure_environment_switch():
    code = "import pocket_spectra as p; print(p.BACKEND)"
    env = dict(os.environ, POCKET_SPECTRA_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
