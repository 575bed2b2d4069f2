"""Floating-point oracle: cyclic Jacobi eigenvalues and residual checks."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import ConvergenceError, InvalidInput
from .spectrum import SpectrumMultiset, to_mpf

DEFAULT_CONVERGENCE_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100
MAX_ORDER = 200


def default_tol() -> float:
    """Spectrum comparison tolerance; ``POCKET_SPECTRA_TOL`` overrides 1e-9."""
    return float(os.environ.get("POCKET_SPECTRA_TOL", "1e-9"))


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]
    order: int
    sweeps: int = 0

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.values)


def eig_sym(m, tol: float = DEFAULT_CONVERGENCE_TOL, max_sweeps: int | None = None,
            vectors: bool = False, backend: str | None = None):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||M||_F)``.  ``max_sweeps`` defaults to the module-level
    ``DEFAULT_MAX_SWEEPS`` at call time.  With ``vectors=True`` also returns the
    accumulated orthogonal matrix (columns in input order, not sorted).
    """
    max_sweeps = DEFAULT_MAX_SWEEPS if max_sweeps is None else max_sweeps
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInput("matrix must be square")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise InvalidInput(f"order {n} exceeds {MAX_ORDER}")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12:
        raise InvalidInput("matrix is not symmetric")
    a = np.ascontiguousarray((a + a.T) / 2)
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    sweeps = _backend.jacobi_sweeps(a, v, tol * scale, max_sweeps, backend)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    spec = NumericSpectrum(tuple(sorted(float(x) for x in np.diag(a))), n, sweeps)
    return (spec, v) if vectors else spec


def _as_list(s) -> list:
    if isinstance(s, SpectrumMultiset):
        return s.numeric_values()
    if isinstance(s, NumericSpectrum):
        return list(s.values)
    return sorted(to_mpf(x) if not isinstance(x, float) else x for x in s)


def spectra_match(s1, s2, tol: float | None = None) -> tuple[bool, float]:
    """Sorted pairwise comparison; returns ``(max |diff| <= tol, max |diff|)``."""
    tol = default_tol() if tol is None else tol
    a, b = _as_list(s1), _as_list(s2)
    if len(a) != len(b):
        raise InvalidInput(f"total multiplicity mismatch: {len(a)} vs {len(b)}")
    dev = max((abs(float(x) - float(y)) for x, y in zip(sorted(a), sorted(b))), default=0.0)
    return dev <= tol, dev


def residual(m, x, lam) -> float:
    """``||M x - lam x||_inf / ||x||_inf``."""
    m = np.asarray(m, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if m.shape[1] != x.shape[0]:
        raise InvalidInput("dimension mismatch")
    nx = np.max(np.abs(x))
    if nx == 0:
        raise InvalidInput("zero vector")
    return float(np.max(np.abs(m @ x - float(lam) * x)) / nx)
