"""Exact univariate polynomials over Q and reduced rational functions.

Coefficients are kept ascending (``coeffs[i]`` multiplies ``x**i``) as Python
``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise, so integer polynomials never pay for rational arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import InvalidInput


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class Poly:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def linear_root(cls, r) -> Poly:
        """``x - r``."""
        return cls([-_norm(r), 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        return reduce(lambda acc, r: acc * cls.linear_root(r), roots, cls.const(1))

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise InvalidInput(f"{self} has non-integer coefficients")
        return list(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidInput("negative polynomial power")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> Poly:
        c = _norm(c)
        return Poly([c * a for a in self.coeffs])

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        if len(rem) <= dq:
            return Poly(), self
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            q = _norm(q)
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(_lift(other))[0]

    def __mod__(self, other):
        return self.divmod(_lift(other))[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InvalidInput(f"{other} does not divide {self}")
        return q

    # -- evaluation & transforms -------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval(self, x):
        return self(x)

    def shift(self, c) -> Poly:
        """The polynomial ``x -> self(x - c)``."""
        c = _norm(c)
        out = Poly()
        lin = Poly([-c, 1])
        for a in reversed(self.coeffs):
            out = out * lin + Poly.const(a)
        return out

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive integral."""
        if self.is_zero():
            return Fraction(0)
        dens = lcm(*(Fraction(c).denominator for c in self.coeffs))
        nums = [int(c * dens) for c in self.coeffs]
        return Fraction(reduce(gcd, nums), dens)

    def primitive(self) -> Poly:
        """Integral, coefficient gcd 1, positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return Poly([Fraction(a) / c for a in self.coeffs])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / Fraction(self.lead))

    # -- comparison & display ----------------------------------------------

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = "" if (a == 1 and i > 0) else str(a)
            if i >= 1:
                body += "x" if i == 1 else f"x^{i}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        """Ascending coefficients; non-integers become ``"p/q"`` strings."""
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Poly:
        return cls(Fraction(c) if isinstance(c, str) else int(c) for c in data)


def _lift(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.const(other)
    return NotImplemented


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic ``[(g_i, i)]`` with ``f ~ prod g_i**i``."""
    if f.degree < 1:
        return []
    f = f.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out


def interpolate(points: Sequence[tuple]) -> Poly:
    """Exact Newton interpolation through ``(x_i, y_i)`` with distinct ``x_i``."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InvalidInput("interpolation abscissae must be distinct")
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = Poly.const(coef[-1]) if n else Poly()
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + Poly.const(coef[i])
    return out


class RatFunc:
    """Reduced quotient ``num / den``.

    Canonical form: ``gcd(num, den) = 1`` over Q and ``den`` primitive with
    positive leading coefficient, so structural equality is value equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _lift(num) if not isinstance(num, Poly) else num
        den = Poly.const(1) if den is None else (_lift(den) if not isinstance(den, Poly) else den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        prim = den.primitive()
        factor = Fraction(prim.lead) / Fraction(den.lead)
        self.num = num.scale(factor)
        self.den = prim

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(Poly.const(c))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise InvalidInput(f"{self} is not a polynomial")
        return self.num.scale(Fraction(1) / Fraction(self.den.lead))

    def __add__(self, other):
        other = _lift_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _lift_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _lift_rf(other) - self

    def __mul__(self, other):
        other = _lift_rf(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift_rf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _lift_rf(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den, self.num) ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def shift(self, c) -> RatFunc:
        """``x -> self(x - c)``."""
        return RatFunc(self.num.shift(c), self.den.shift(c))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        n = self.num(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def __eq__(self, other):
        other = _lift_rf(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.as_poly())
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RatFunc:
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def _lift_rf(other):
    if isinstance(other, RatFunc):
        return other
    if isinstance(other, Poly):
        return RatFunc(other)
    if isinstance(other, (int, Fraction)):
        return RatFunc(Poly.const(other))
    return NotImplemented
