"""Commutative bicomplex arithmetic.

The ring is spanned by {1, i, j, ij} with two commuting imaginary units,
i^2 = j^2 = -1, and the hyperbolic unit ij with (ij)^2 = +1.  Two
involutions act on it:

* ``conjugate``: i -> -i, ij -> -ij, fixes 1 and j;
* ``reverse``:   i -> -i, j -> -j,  fixes 1 and ij.

The null-plane units o = (i+j)/2 and obar = (j-i)/2 are zero divisors
(o*obar = 0) and satisfy oo = i*o = j*o.  The pair of involutions projects
a bicomplex number onto the base coordinates of the quadratic sphere map:
s*conjugate(s) = xi3 + j*xi1 and s*reverse(s) = |s|^2 - ij*xi2.

Internally the ring splits over the idempotents e+- = (1 +- ij)/2 into two
copies of the complex plane; exp and inverse use that split, so they are
exact up to one complex exp / division per component.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass


class StructureError(ArithmeticError):
    """An algebraic identity that must hold exactly was violated."""


class ZeroDivisorError(ZeroDivisionError):
    """Inversion of a bicomplex number with a vanishing idempotent part."""


@dataclass(frozen=True)
class Bicomplex:
    """re + i*im_i + j*im_j + ij*im_ij with real coefficients."""

    re: float = 0.0
    im_i: float = 0.0
    im_j: float = 0.0
    im_ij: float = 0.0

    def __add__(self, other):
        other = _coerce(other)
        return Bicomplex(
            self.re + other.re,
            self.im_i + other.im_i,
            self.im_j + other.im_j,
            self.im_ij + other.im_ij,
        )

    __radd__ = __add__

    def __neg__(self):
        return Bicomplex(-self.re, -self.im_i, -self.im_j, -self.im_ij)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        a1, a2, a3, a4 = self.re, self.im_i, self.im_j, self.im_ij
        b1, b2, b3, b4 = other.re, other.im_i, other.im_j, other.im_ij
        return Bicomplex(
            a1 * b1 - a2 * b2 - a3 * b3 + a4 * b4,
            a1 * b2 + a2 * b1 - a3 * b4 - a4 * b3,
            a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def conjugate(self) -> "Bicomplex":
        return Bicomplex(self.re, -self.im_i, self.im_j, -self.im_ij)

    def reverse(self) -> "Bicomplex":
        return Bicomplex(self.re, -self.im_i, -self.im_j, self.im_ij)

    def squared_length(self) -> float:
        return self.re**2 + self.im_i**2 + self.im_j**2 + self.im_ij**2

    def max_abs(self) -> float:
        return max(abs(self.re), abs(self.im_i), abs(self.im_j), abs(self.im_ij))

    def idempotent_parts(self) -> tuple[complex, complex]:
        """Components (z+, z-) along e+- = (1 +- ij)/2, complex in i."""
        w1 = complex(self.re, self.im_i)
        w2 = complex(self.im_j, self.im_ij)
        return w1 - 1j * w2, w1 + 1j * w2

    @staticmethod
    def from_idempotent_parts(z_plus: complex, z_minus: complex) -> "Bicomplex":
        w1 = (z_plus + z_minus) / 2
        w2 = 1j * (z_plus - z_minus) / 2
        return Bicomplex(w1.real, w1.imag, w2.real, w2.imag)

    def inverse(self, tol: float = 1e-14) -> "Bicomplex":
        zp, zm = self.idempotent_parts()
        if abs(zp) <= tol or abs(zm) <= tol:
            raise ZeroDivisorError(
                f"not invertible: idempotent parts ({zp}, {zm})"
            )
        return Bicomplex.from_idempotent_parts(1 / zp, 1 / zm)

    def exp(self) -> "Bicomplex":
        zp, zm = self.idempotent_parts()
        return Bicomplex.from_idempotent_parts(cmath.exp(zp), cmath.exp(zm))


def _coerce(x) -> Bicomplex:
    if isinstance(x, Bicomplex):
        return x
    if isinstance(x, complex):
        return Bicomplex(x.real, x.imag)
    if isinstance(x, (int, float)):
        return Bicomplex(float(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as Bicomplex")


ZERO = Bicomplex()
ONE = Bicomplex(1.0)
UNIT_I = Bicomplex(0.0, 1.0)
UNIT_J = Bicomplex(0.0, 0.0, 1.0)
UNIT_IJ = Bicomplex(0.0, 0.0, 0.0, 1.0)


def null_plane_units() -> tuple[Bicomplex, Bicomplex]:
    """The zero-divisor pair (o, obar) with i = o - obar and j = o + obar."""
    o = Bicomplex(0.0, 0.5, 0.5, 0.0)
    obar = Bicomplex(0.0, -0.5, 0.5, 0.0)
    return o, obar


@dataclass(frozen=True)
class HopfTriple:
    """Base-sphere coordinates (xi1, xi2, xi3) with xi1^2+xi2^2+xi3^2 = len_sq^2."""

    xi1: float
    xi2: float
    xi3: float
    len_sq: float


def involution_projections(s: Bicomplex, tol: float = 1e-9) -> HopfTriple:
    """Extract the sphere-map image of s from its two involutions.

    s*conjugate(s) must land in span{1, j} and s*reverse(s) in span{1, ij};
    any leakage into other components beyond tol (scaled) signals a broken
    product and raises StructureError.
    """
    scale = 1.0 + s.squared_length()
    pc = s * s.conjugate()
    if abs(pc.im_i) > tol * scale or abs(pc.im_ij) > tol * scale:
        raise StructureError(f"s*conjugate(s) leaked outside span(1, j): {pc}")
    pr = s * s.reverse()
    if abs(pr.im_i) > tol * scale or abs(pr.im_j) > tol * scale:
        raise StructureError(f"s*reverse(s) leaked outside span(1, ij): {pr}")
    return HopfTriple(xi1=pc.im_j, xi2=-pr.im_ij, xi3=pc.re, len_sq=pr.re)
