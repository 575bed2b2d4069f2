"""Hot kernels: compiled when ``pocket_spectra._kernels`` is importable.

Set ``POCKET_SPECTRA_PURE=1`` before import to force the pure-Python path.
Both paths produce identical exact characteristic polynomials; the Jacobi
solvers agree to rounding.
"""
from __future__ import annotations

import os
from math import comb, isqrt

import numpy as np

try:
    if os.environ.get("POCKET_SPECTRA_PURE"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _ext  # type: ignore[attr-defined]
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"

_INT64_SAFE = 1 << 31


# -- characteristic polynomial ---------------------------------------------


def charpoly_faddeev_py(rows: list[list[int]]) -> list[int]:
    """Faddeev-LeVerrier in arbitrary-precision integers.

    Every ``c_{n-k} = -tr(A N_k) / k`` is an exact integer division.
    """
    n = len(rows)
    a = [list(map(int, r)) for r in rows]
    at = list(zip(*a))
    c = [0] * (n + 1)
    c[n] = 1
    cur = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        cols = list(zip(*cur))
        nxt = [[sum(x * y for x, y in zip(ai, col)) for col in cols] for ai in a]
        ck = c[n - k + 1]
        for i in range(n):
            nxt[i][i] += ck
        cur = nxt
        tr = sum(x * y for ci, ai in zip(at, cur) for x, y in zip(ci, ai))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        c[n - k] = q
    return c


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if p % d == 0:
            return p == d
    f = 17
    lim = isqrt(p)
    while f <= lim:
        if p % f == 0:
            return False
        f += 2
    return True


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    p = _PRIMES[-1] - 2 if _PRIMES else (1 << 31) - 1
    while len(_PRIMES) < count:
        if _is_prime(p):
            _PRIMES.append(p)
        p -= 2
    return _PRIMES[:count]


def coefficient_bound(rows) -> int:
    """Upper bound on ``|c_k|`` for ``det(xI - M)``.

    ``c_{n-k}`` is the k-th elementary symmetric function of the
    eigenvalues, each bounded by the max absolute row sum ``rho``.
    """
    n = len(rows)
    rho = max((sum(abs(int(x)) for x in r) for r in rows), default=0)
    return max(comb(n, k) * rho**k for k in range(n + 1))


def charpoly_multimodular(rows) -> list[int]:
    """Faddeev-LeVerrier mod several primes, lifted by CRT."""
    m = np.ascontiguousarray(np.asarray(rows, dtype=np.int64))
    n = m.shape[0]
    bound = 2 * coefficient_bound(rows) + 1
    residues = None
    primes, modulus = [], 1
    while modulus <= bound:
        primes = _primes(len(primes) + 1)
        modulus *= primes[-1]
    for p in primes:
        r = _ext.charpoly_modp(m, p)
        if residues is None:
            residues, acc = r, p
        else:
            inv = pow(acc, -1, p)
            residues = [x + acc * (((y - x) * inv) % p) for x, y in zip(residues, r)]
            acc *= p
    half = modulus // 2
    return [x - modulus if x > half else x for x in residues][: n + 1]


def charpoly_coeffs(rows, backend: str | None = None) -> list[int]:
    """Ascending integer coefficients of ``det(xI - M)``."""
    backend = backend or BACKEND
    n = len(rows)
    if n == 0:
        return [1]
    if backend == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernels are not available")
        if n < _INT64_SAFE and all(abs(int(x)) < _INT64_SAFE for r in rows for x in r):
            return charpoly_multimodular(rows)
    return charpoly_faddeev_py([[int(x) for x in r] for r in rows])


# -- Jacobi ----------------------------------------------------------------


def jacobi_sweeps_py(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int) -> int:
    """numpy twin of the compiled ``jacobi_sweeps``; same rotation order."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off < tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return -1


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int,
                  backend: str | None = None) -> int:
    backend = backend or BACKEND
    if backend == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernels are not available")
        return _ext.jacobi_sweeps(a, v, tol, max_sweeps)
    return jacobi_sweeps_py(a, v, tol, max_sweeps)
