"""Second-order dual numbers (truncated 2-jets) for exact differentiation.

A Jet carries (value, first derivative, second derivative) with respect to a
single scalar parameter.  Components may be float, complex, or nested Jets,
so jets of jets work; that is what makes brackets of brackets (Jacobi tests)
differentiable without symbolic algebra.
"""

from __future__ import annotations

import cmath
import math


class Jet:
    """f, f', f'' propagated through arithmetic via the chain rule."""

    __slots__ = ("f", "d1", "d2")

    def __init__(self, f, d1=0.0, d2=0.0):
        self.f = f
        self.d1 = d1
        self.d2 = d2

    def __repr__(self):
        return f"Jet({self.f!r}, {self.d1!r}, {self.d2!r})"

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.f + other.f, self.d1 + other.d1, self.d2 + other.d2)
        return Jet(self.f + other, self.d1, self.d2)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.f, -self.d1, -self.d2)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(
                self.f * other.f,
                self.f * other.d1 + self.d1 * other.f,
                self.f * other.d2 + 2 * self.d1 * other.d1 + self.d2 * other.f,
            )
        return Jet(self.f * other, self.d1 * other, self.d2 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            inv = 1.0 / other
            return Jet(self.f * inv, self.d1 * inv, self.d2 * inv)
        w = self.f / other.f
        w1 = (self.d1 - w * other.d1) / other.f
        w2 = (self.d2 - 2 * w1 * other.d1 - w * other.d2) / other.f
        return Jet(w, w1, w2)

    def __rtruediv__(self, other):
        return Jet(other) / self

    def __pow__(self, n):
        if isinstance(n, int):
            if n == 0:
                return Jet(1.0 * (self.f * 0 + 1))
            if n < 0:
                return 1.0 / (self ** (-n))
            out = self
            for _ in range(n - 1):
                out = out * self
            return out
        return exp(n * log(self))


def value(x):
    return x.f if isinstance(x, Jet) else x


def d1(x):
    return x.d1 if isinstance(x, Jet) else 0.0


def d2(x):
    return x.d2 if isinstance(x, Jet) else 0.0


def seed(x):
    """Jet representing the identity function at x (derivative 1)."""
    return Jet(x, 1.0, 0.0)


def _chain(x, f0, f1, f2):
    # f(u) for u = (u0, u1, u2):  (f0, f1*u1, f1*u2 + f2*u1^2)
    return Jet(f0, f1 * x.d1, f1 * x.d2 + f2 * x.d1 * x.d1)


def _is_cplx(x):
    return isinstance(x, complex)


def sin(x):
    if isinstance(x, Jet):
        s, c = sin(x.f), cos(x.f)
        return _chain(x, s, c, -s)
    return cmath.sin(x) if _is_cplx(x) else math.sin(x)


def cos(x):
    if isinstance(x, Jet):
        s, c = sin(x.f), cos(x.f)
        return _chain(x, c, -s, -c)
    return cmath.cos(x) if _is_cplx(x) else math.cos(x)


def tan(x):
    return sin(x) / cos(x)


def exp(x):
    if isinstance(x, Jet):
        e = exp(x.f)
        return _chain(x, e, e, e)
    return cmath.exp(x) if _is_cplx(x) else math.exp(x)


def log(x):
    if isinstance(x, Jet):
        u = x.f
        inv = 1.0 / u
        return _chain(x, log(u), inv, -inv * inv)
    return cmath.log(x) if _is_cplx(x) else math.log(x)


def sqrt(x):
    if isinstance(x, Jet):
        r = sqrt(x.f)
        inv = 0.5 / r
        return _chain(x, r, inv, -0.5 * inv / x.f)
    return cmath.sqrt(x) if _is_cplx(x) else math.sqrt(x)


def sinh(x):
    e, em = exp(x), exp(-x)
    return (e - em) * 0.5


def cosh(x):
    e, em = exp(x), exp(-x)
    return (e + em) * 0.5


def hypot(x, y):
    return sqrt(x * x + y * y)


def atan2(y, x):
    """Jet-aware atan2; differentiates the smooth local branch."""
    if not isinstance(x, Jet) and not isinstance(y, Jet):
        return math.atan2(y, x)
    xj = x if isinstance(x, Jet) else Jet(x)
    yj = y if isinstance(y, Jet) else Jet(y)
    f = atan2(yj.f, xj.f)
    den = xj.f * xj.f + yj.f * yj.f
    num = xj.f * yj.d1 - yj.f * xj.d1
    g1 = num / den
    num_d = xj.f * yj.d2 - yj.f * xj.d2
    den_d = 2 * (xj.f * xj.d1 + yj.f * yj.d1)
    g2 = (num_d * den - num * den_d) / (den * den)
    return Jet(f, g1, g2)


def derive1(f, x0):
    """First derivative of a scalar function at x0."""
    return f(seed(x0)).d1


def derive2(f, x0):
    """Second derivative of a scalar function at x0."""
    return f(seed(x0)).d2
