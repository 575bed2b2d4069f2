"""Exact matrix algebra over Z, Q and Q(x).

Characteristic polynomials go through :mod:`pocket_spectra._backend`;
everything else here is small and runs in plain Python integers and
fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _backend
from .errors import InternalError, InvalidInput
from .poly import Poly, RatFunc, interpolate, poly_lcm

MAX_CHARPOLY_ORDER = 64


def _rows(m) -> list[list]:
    rows = m.tolist() if isinstance(m, np.ndarray) else [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidInput("matrix must be square")
    return rows


def charpoly_exact(m, backend: str | None = None) -> Poly:
    """``det(xI - M)`` for an integer matrix of order at most 64."""
    rows = _rows(m)
    if len(rows) > MAX_CHARPOLY_ORDER:
        raise InvalidInput(f"order {len(rows)} exceeds {MAX_CHARPOLY_ORDER}")
    if any(int(x) != x for r in rows for x in r):
        raise InvalidInput("charpoly_exact needs integer entries")
    return Poly(_backend.charpoly_coeffs(rows, backend))


def det_bareiss(m) -> int | Fraction:
    """Fraction-free determinant (falls back to Fractions for rational input)."""
    a = [list(r) for r in _rows(m)]
    n = len(a)
    if n == 0:
        return 1
    integral = all(isinstance(x, int) for r in a for x in r)
    if not integral:
        return _det_fraction(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_fraction(a):
    a = [[Fraction(x) for x in r] for r in a]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def solve_exact(m, b: Sequence) -> list[Fraction] | None:
    """Solve ``M y = b`` over Q; ``None`` if ``M`` is singular."""
    a = [[Fraction(x) for x in r] + [Fraction(bi)] for r, bi in zip(_rows(m), b)]
    n = len(a)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [r[n] for r in a]


def _points():
    """0, 1, -1, 2, -2, ... forever."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def coronal(m) -> RatFunc:
    """Sum of all entries of ``(xI - M)^{-1}`` as a reduced rational function.

    ``Gamma(s) * det(sI - M)`` is a polynomial of degree < n, so it is
    interpolated from exact solves at n points that avoid the spectrum.
    """
    rows = _rows(m)
    n = len(rows)
    f = charpoly_exact(rows)
    samples = []
    for s in _points():
        if len(samples) == n:
            break
        fs = f(s)
        if fs == 0:
            continue
        shifted = [[(s if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        y = solve_exact(shifted, [1] * n)
        samples.append((s, sum(y) * fs))
    return RatFunc(interpolate(samples), f)


def coronal_constant_row_sum(n: int, t) -> RatFunc:
    """``n / (x - t)``: the coronal of any order-n matrix with row sums ``t``."""
    if n < 1:
        raise InvalidInput("order must be positive")
    return RatFunc(Poly.const(n), Poly.linear_root(t))


def row_sums_constant(m) -> int | None:
    sums = {sum(r) for r in _rows(m)}
    return sums.pop() if len(sums) == 1 else None


def det_rfmatrix(m: Sequence[Sequence], budget: int = 256) -> RatFunc:
    """Exact determinant of a square matrix of rational functions.

    Each row is multiplied by the lcm of its denominators; the resulting
    polynomial matrix is evaluated at integer points, its determinant is
    interpolated, and the cleared factors are divided back out.
    """
    rows = [[e if isinstance(e, RatFunc) else RatFunc(e) for e in r] for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidInput("matrix must be square")
    if n == 0:
        return RatFunc.const(1)
    cleared, lcds = [], []
    for r in rows:
        lcd = Poly.const(1)
        for e in r:
            if e.den.degree > 0:
                lcd = poly_lcm(lcd, e.den)
        lcd = lcd.primitive()
        lcds.append(lcd)
        cleared.append([e.num * lcd.exact_div(e.den) for e in r])
    deg = sum(max(p.degree for p in r) for r in cleared)
    if deg < 0:
        return RatFunc.const(0)
    need = deg + 1
    samples = []
    tried = 0
    for s in _points():
        if len(samples) == need:
            break
        tried += 1
        if tried > need + budget:
            raise InternalError(
                f"det_rfmatrix exhausted its abscissa budget ({tried} points tried, "
                f"{len(samples)}/{need} usable)"
            )
        if any(lcd(s) == 0 for lcd in lcds):
            continue
        vals = [[p(s) for p in r] for r in cleared]
        samples.append((s, det_bareiss(vals)))
    det_poly = interpolate(samples)
    denom = Poly.const(1)
    for lcd in lcds:
        denom = denom * lcd
    return RatFunc(det_poly, denom)


def char_matrix(m, diag_shift=None) -> list[list[RatFunc]]:
    """``xI - M`` as rational-function entries (M may hold RatFuncs)."""
    rows = [list(r) for r in m]
    n = len(rows)
    x = RatFunc(Poly.x())
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = rows[i][j]
            e = e if isinstance(e, RatFunc) else RatFunc.const(int(e) if not isinstance(e, Fraction) else e)
            row.append((x - e) if i == j else -e)
        out.append(row)
    return out


def kronecker(a, b) -> np.ndarray:
    """Block matrix ``(a_ij * B)``; integer entries stay exact."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.dtype == object or b.dtype == object:
        return np.kron(a.astype(object), b.astype(object))
    return np.kron(a.astype(np.int64), b.astype(np.int64))


def ones(n: int) -> np.ndarray:
    return np.ones((n, 1), dtype=np.int64)
