"""Eigenvalue multisets mixing exact and numeric values.

A value is one of

* ``Fraction`` -- rational eigenvalue,
* :class:`QuadraticRoot` -- an irrational root of ``a x^2 + b x + c``,
* ``mpmath.mpf`` -- anything else, at ``NUMERIC_DPS`` digits.

Quadratic roots with a perfect-square discriminant are always turned into
``Fraction`` on construction, so two exact values are equal iff they compare
equal structurally.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Iterator, Union

import mpmath

from .errors import InvalidInput
from .poly import Poly, squarefree_decomposition

NUMERIC_DPS = 40
_CLOSE = 1e-12


def _ctx():
    ctx = mpmath.MPContext()
    ctx.dps = NUMERIC_DPS
    return ctx


MP = _ctx()


@dataclass(frozen=True)
class QuadraticRoot:
    """``(-b + sign * sqrt(b^2 - 4ac)) / (2a)`` with integer ``a > 0``,
    ``gcd(a, b, c) = 1`` and a positive non-square discriminant."""

    a: int
    b: int
    c: int
    sign: int  # +1 or -1

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def numeric(self):
        d = MP.sqrt(MP.mpf(self.discriminant))
        return (-self.b + self.sign * d) / (2 * self.a)

    def __float__(self):
        return float(self.numeric())

    def conjugate(self) -> QuadraticRoot:
        return QuadraticRoot(self.a, self.b, self.c, -self.sign)

    def shift(self, t) -> QuadraticRoot:
        """The root plus the rational ``t`` (root of ``a(x-t)^2 + b(x-t) + c``)."""
        t = Fraction(t)
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        na, nb, nc = a, b - 2 * a * t, a * t * t - b * t + c
        return _make_quadratic(na, nb, nc, self.sign)

    def __str__(self):
        d, out = self.discriminant, 1
        f = 2
        while f * f <= d:
            while d % (f * f) == 0:
                d //= f * f
                out *= f
            f += 1
        g = gcd(gcd(self.b, out), 2 * self.a)
        num, coef, den = -self.b // g, out // g, 2 * self.a // g
        root = f"sqrt({d})" if coef == 1 else f"{coef}*sqrt({d})"
        s = "+" if self.sign > 0 else "-"
        body = f"{num} {s} {root}" if num else (root if self.sign > 0 else f"-{root}")
        return f"({body})/{den}" if den != 1 else (f"({body})" if num else body)


Value = Union[Fraction, QuadraticRoot, "mpmath.mpf"]


def _make_quadratic(a, b, c, sign):
    den = 1
    for v in (a, b, c):
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ia, ib, ic = (int(Fraction(v) * den) for v in (a, b, c))
    g = gcd(gcd(ia, ib), ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0:
        ia, ib, ic = -ia, -ib, -ic
    disc = ib * ib - 4 * ia * ic
    if disc < 0:
        raise InvalidInput(f"complex roots for {ia}x^2 + {ib}x + {ic}")
    r = isqrt(disc)
    if r * r == disc:
        return Fraction(-ib + sign * r, 2 * ia)
    return QuadraticRoot(ia, ib, ic, sign)


def quadratic_roots(a, b, c) -> list[Value]:
    """Both roots of ``a x^2 + b x + c`` (real coefficients, rational)."""
    if a == 0:
        raise InvalidInput("leading coefficient must be nonzero")
    return [_make_quadratic(a, b, c, 1), _make_quadratic(a, b, c, -1)]


def as_value(v) -> Value:
    if isinstance(v, QuadraticRoot):
        return v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, float) or hasattr(v, "_mpf_"):
        return MP.mpf(v)
    raise TypeError(f"unsupported eigenvalue type {type(v).__name__}")


def is_exact(v) -> bool:
    return isinstance(v, (Fraction, QuadraticRoot))


def to_mpf(v):
    if isinstance(v, QuadraticRoot):
        return v.numeric()
    if isinstance(v, Fraction):
        return MP.mpf(v.numerator) / v.denominator
    return MP.mpf(v)


def shift_value(v, t) -> Value:
    if isinstance(v, QuadraticRoot):
        return v.shift(t)
    if isinstance(v, Fraction):
        return v + Fraction(t)
    return MP.mpf(v) + to_mpf(Fraction(t))


class SpectrumMultiset:
    """Eigenvalues with multiplicities."""

    def __init__(self, items: Iterable = ()):
        self._mult: Counter = Counter()
        for item in items:
            if isinstance(item, tuple):
                self.add(*item)
            else:
                self.add(item)

    @classmethod
    def from_counts(cls, counts) -> SpectrumMultiset:
        out = cls()
        for v, k in counts.items():
            out.add(v, k)
        return out

    def add(self, value, multiplicity: int = 1) -> None:
        if multiplicity < 1:
            raise InvalidInput("multiplicity must be positive")
        self._mult[as_value(value)] += multiplicity

    def remove(self, value, count: int = 1) -> None:
        v = as_value(value)
        if self._mult.get(v, 0) < count:
            raise InvalidInput(f"cannot remove {count} copies of {v}")
        self._mult[v] -= count
        if not self._mult[v]:
            del self._mult[v]

    def multiplicity(self, value) -> int:
        return self._mult.get(as_value(value), 0)

    @property
    def total(self) -> int:
        return sum(self._mult.values())

    def __len__(self):
        return self.total

    def entries(self) -> list[tuple[Value, int]]:
        return sorted(self._mult.items(), key=lambda kv: to_mpf(kv[0]))

    def __iter__(self) -> Iterator[tuple[Value, int]]:
        return iter(self.entries())

    def copy(self) -> SpectrumMultiset:
        return SpectrumMultiset.from_counts(self._mult)

    def union(self, other: SpectrumMultiset) -> SpectrumMultiset:
        out = self.copy()
        for v, k in other._mult.items():
            out.add(v, k)
        return out

    __or__ = union

    def times(self, k: int) -> SpectrumMultiset:
        """Every multiplicity multiplied by ``k`` (``k = 0`` gives empty)."""
        if k == 0:
            return SpectrumMultiset()
        return SpectrumMultiset.from_counts({v: m * k for v, m in self._mult.items()})

    def shifted(self, t) -> SpectrumMultiset:
        out = SpectrumMultiset()
        for v, k in self._mult.items():
            out.add(shift_value(v, t), k)
        return out

    def is_fully_exact(self) -> bool:
        return all(is_exact(v) for v in self._mult)

    def numeric_values(self) -> list:
        """Ascending mpf list with multiplicities expanded."""
        out = []
        for v, k in self._mult.items():
            out.extend([to_mpf(v)] * k)
        return sorted(out)

    def max_value(self):
        return max(self._mult, key=to_mpf)

    def exact_sum(self) -> Fraction:
        """Symbolic sum; conjugate quadratic roots must pair up."""
        total = Fraction(0)
        quads: Counter = Counter()
        for v, k in self._mult.items():
            if isinstance(v, Fraction):
                total += v * k
            elif isinstance(v, QuadraticRoot):
                quads[(v.a, v.b, v.c)] += k * v.sign
                total += Fraction(-v.b, 2 * v.a) * k
            else:
                raise InvalidInput("spectrum has numeric entries; no exact sum")
        if any(quads.values()):
            raise InvalidInput("unpaired quadratic roots; sum is irrational")
        return total

    def __eq__(self, other):
        if not isinstance(other, SpectrumMultiset):
            return NotImplemented
        return self._mult == other._mult

    def __repr__(self):
        body = ", ".join(f"{_fmt(v)}x{k}" if k > 1 else _fmt(v) for v, k in self.entries())
        return f"SpectrumMultiset({{{body}}})"

    def to_json(self) -> list[dict]:
        out = []
        for v, k in self.entries():
            item = {"value": _fmt(v), "multiplicity": k, "approx": float(to_mpf(v))}
            if isinstance(v, Fraction):
                item["exact"] = str(v)
            elif isinstance(v, QuadraticRoot):
                item["quadratic"] = [v.a, v.b, v.c, v.sign]
            out.append(item)
        return out


def _fmt(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, QuadraticRoot):
        return str(v)
    return MP.nstr(v, 12)


def compare_spectra(s1: SpectrumMultiset, s2: SpectrumMultiset, tol: float) -> tuple[bool, float, bool]:
    """Match two multisets.

    Exact values present on both sides cancel exactly; whatever is left is
    compared as sorted numbers.  Returns ``(ok, max_deviation,
    exact_part_agrees)`` where the last flag says no exact value of one side
    had to be matched numerically against an exact value of the other.
    """
    if s1.total != s2.total:
        raise InvalidInput(f"total multiplicity mismatch: {s1.total} vs {s2.total}")
    a, b = s1._mult.copy(), s2._mult.copy()
    for v in list(a):
        if is_exact(v) and v in b:
            common = min(a[v], b[v])
            a[v] -= common
            b[v] -= common
    a, b = +a, +b
    exact_clash = any(is_exact(v) for v in a) and any(is_exact(v) for v in b)
    ra = sorted(x for v, k in a.items() for x in [to_mpf(v)] * k)
    rb = sorted(x for v, k in b.items() for x in [to_mpf(v)] * k)
    dev = max((abs(x - y) for x, y in zip(ra, rb)), default=MP.mpf(0))
    return dev <= tol, float(dev), not exact_clash


def _real_roots(f: Poly) -> list:
    coeffs = [MP.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in reversed(f.coeffs)]
    if f.degree == 1:
        return [-coeffs[1] / coeffs[0]]
    roots = MP.polyroots(coeffs, maxsteps=400, extraprec=4 * NUMERIC_DPS + 10 * f.degree)
    out = []
    for r in roots:
        if abs(MP.im(r)) > MP.mpf(10) ** (-NUMERIC_DPS // 3) * (1 + abs(r)):
            raise InvalidInput(f"non-real root {r} (matrix not symmetric?)")
        out.append(MP.re(r))
    return sorted(out)


def spectrum_from_poly(f: Poly) -> SpectrumMultiset:
    """Roots of a real-rooted polynomial with exact values where possible.

    Rational roots and quadratic-surd pairs are recognised by exact
    division; other roots stay numeric.
    """
    out = SpectrumMultiset()
    for g, mult in squarefree_decomposition(f):
        g = g.primitive()
        roots = _real_roots(g)
        rest = []
        for r in roots:
            lead = g.lead
            cand = [Fraction(int(MP.nint(r * q)), q) for q in _divisors(lead)]
            hit = next((c for c in cand if abs(r - to_mpf(c)) < _CLOSE and g(c) == 0), None)
            if hit is not None:
                out.add(hit, mult)
                g = g.exact_div(Poly([-hit, 1])).primitive()
            else:
                rest.append(r)
        used = [False] * len(rest)
        for i in range(len(rest)):
            if used[i]:
                continue
            for j in range(i + 1, len(rest)):
                if used[j]:
                    continue
                quad = _match_quadratic(g, rest[i], rest[j])
                if quad is not None:
                    used[i] = used[j] = True
                    for v in quadratic_roots(*quad):
                        out.add(v, mult)
                    g = g.exact_div(Poly([quad[2], quad[1], quad[0]])).primitive()
                    break
            if not used[i]:
                used[i] = True
                out.add(rest[i], mult)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(int(n))
    if n > 10**6:
        return [1]
    return [d for d in range(1, n + 1) if n % d == 0]


def _match_quadratic(g: Poly, r1, r2):
    """Integer ``(a, b, c)`` with ``a x^2 + b x + c`` dividing g and vanishing
    at r1, r2, if the pair looks like conjugate surds."""
    if g.degree < 2:
        return None
    for a in _divisors(g.lead):
        b = -(r1 + r2) * a
        c = r1 * r2 * a
        ib, ic = int(MP.nint(b)), int(MP.nint(c))
        if abs(b - ib) > 1e-8 or abs(c - ic) > 1e-8:
            continue
        if ib * ib - 4 * a * ic <= 0:
            continue
        lo, hi = sorted(to_mpf(v) for v in quadratic_roots(a, ib, ic))
        if abs(lo - min(r1, r2)) > _CLOSE or abs(hi - max(r1, r2)) > _CLOSE:
            continue
        if (g % Poly([ic, ib, a])).is_zero():
            return a, ib, ic
    return None
