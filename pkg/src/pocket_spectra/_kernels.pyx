# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

charpoly_modp
    Faddeev-LeVerrier over Z/pZ for a prime p < 2**31; the caller lifts the
    residues of several primes back to integers by CRT.
jacobi_sweeps
    Cyclic Jacobi rotations on a dense symmetric float64 matrix.

Both release the GIL so callers can fan out across threads.
"""
import numpy as np

from libc.math cimport sqrt
from libc.stdint cimport int64_t, uint64_t


cdef inline uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) noexcept nogil:
    cdef uint64_t r = 1
    a %= p
    while e:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


def charpoly_modp(const int64_t[:, ::1] m, uint64_t p):
    """Ascending coefficients of det(xI - m) reduced mod p."""
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, l, k
    cdef uint64_t acc, tr, inv, cprev
    cdef uint64_t top = <uint64_t>1 << 63
    if p <= <uint64_t>n or p >= (<uint64_t>1 << 31):
        raise ValueError("need n < p < 2**31")
    a_arr = np.empty((n, n), dtype=np.uint64)
    cur_arr = np.zeros((n, n), dtype=np.uint64)
    nxt_arr = np.empty((n, n), dtype=np.uint64)
    c_arr = np.zeros(n + 1, dtype=np.uint64)
    cdef uint64_t[:, ::1] a = a_arr
    cdef uint64_t[:, ::1] cur = cur_arr
    cdef uint64_t[:, ::1] nxt = nxt_arr
    cdef uint64_t[::1] c = c_arr
    cdef int64_t v
    with nogil:
        for i in range(n):
            for j in range(n):
                v = m[i, j] % <int64_t>p
                if v < 0:
                    v += <int64_t>p
                a[i, j] = <uint64_t>v
        c[n] = 1
        for k in range(1, n + 1):
            # N_k = A N_{k-1} + c_{n-k+1} I
            cprev = c[n - k + 1]
            for i in range(n):
                for j in range(n):
                    acc = 0
                    for l in range(n):
                        acc += a[i, l] * cur[l, j]
                        if acc >= top:
                            acc %= p
                    nxt[i, j] = acc % p
                nxt[i, i] = (nxt[i, i] + cprev) % p
            for i in range(n):
                for j in range(n):
                    cur[i, j] = nxt[i, j]
            # c_{n-k} = -tr(A N_k) / k
            tr = 0
            for i in range(n):
                for l in range(n):
                    tr += a[i, l] * cur[l, i]
                    if tr >= top:
                        tr %= p
            tr %= p
            inv = _powmod(<uint64_t>k, p - 2, p)
            c[n - k] = ((p - tr) % p) * inv % p
    return [int(x) for x in c_arr]


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] v, double tol, int max_sweeps):
    """Rotate ``a`` towards diagonal form in place, accumulating into ``v``.

    Returns the number of sweeps performed, or -1 if the off-diagonal
    Frobenius norm is still >= tol after ``max_sweeps`` sweeps.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double off, apq, tau, t, c, s, x, y
    cdef int result = -1
    with nogil:
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for p in range(n):
                for q in range(p + 1, n):
                    off += a[p, q] * a[p, q]
            if sqrt(2.0 * off) < tol:
                result = sweep
                break
            if sweep == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        x = a[k, p]
                        y = a[k, q]
                        a[k, p] = c * x - s * y
                        a[k, q] = s * x + c * y
                    for k in range(n):
                        x = a[p, k]
                        y = a[q, k]
                        a[p, k] = c * x - s * y
                        a[q, k] = s * x + c * y
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for k in range(n):
                        x = v[k, p]
                        y = v[k, q]
                        v[k, p] = c * x - s * y
                        v[k, q] = s * x + c * y
    return result
