"""Coordinate charts on the Euclidean plane and their tensor data.

Four charts cover the constructions in this package:

===========  =====================  ==========================================
chart        coordinates (y0, y1)   embedding (x0, x1)
===========  =====================  ==========================================
cartesian    (x0, x1)               identity
polar        (r, phi)               (r cos phi, r sin phi)
holographic  (theta, phi)           (sin theta cos phi, sin theta sin phi)
conformal    (rho, phi)             (e^rho cos phi, e^rho sin phi)
===========  =====================  ==========================================

Angles live in [0, 2*pi); the holographic chart covers the open unit disk
with theta in (0, pi/2) -- its metric degenerates at theta = pi/2, so points
within GUARD of a domain boundary are rejected rather than producing huge
values.  Basis vectors are computed by dual-number differentiation of the
embedding; closed forms are kept alongside as an independent cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import dual

GUARD = 1e-8
TWO_PI = 2.0 * math.pi


class DomainError(ValueError):
    """Chart point outside (or too close to the boundary of) its domain."""


class PoleCrossingError(ArithmeticError):
    """A conformal map hit a pole (vanishing denominator)."""


class ChartId(enum.Enum):
    CARTESIAN = "cartesian"
    POLAR = "polar"
    HOLOGRAPHIC = "holographic"
    CONFORMAL = "conformal"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ChartPoint:
    chart: ChartId
    y0: float
    y1: float


def validate(p: ChartPoint) -> None:
    """Raise DomainError unless p lies safely inside its chart's domain."""
    if p.chart is ChartId.CARTESIAN:
        return
    if not (0.0 <= p.y1 < TWO_PI):
        raise DomainError(f"angle {p.y1} outside [0, 2*pi)")
    if p.chart is ChartId.POLAR:
        if p.y0 < GUARD:
            raise DomainError(f"radius {p.y0} below guard {GUARD}")
    elif p.chart is ChartId.HOLOGRAPHIC:
        if not (GUARD <= p.y0 <= math.pi / 2 - GUARD):
            raise DomainError(
                f"theta {p.y0} outside ({GUARD}, pi/2 - {GUARD})"
            )
    # conformal: y0 unrestricted


def _embed(chart: ChartId, y0, y1):
    """Embedding coordinate functions; works on floats and jets alike."""
    if chart is ChartId.CARTESIAN:
        return y0, y1
    if chart is ChartId.POLAR:
        return y0 * dual.cos(y1), y0 * dual.sin(y1)
    if chart is ChartId.HOLOGRAPHIC:
        s = dual.sin(y0)
        return s * dual.cos(y1), s * dual.sin(y1)
    if chart is ChartId.CONFORMAL:
        e = dual.exp(y0)
        return e * dual.cos(y1), e * dual.sin(y1)
    raise ValueError(chart)


def embed(p: ChartPoint) -> tuple[float, float]:
    validate(p)
    return _embed(p.chart, p.y0, p.y1)


# jet-aware embedding for callers composing their own fields
embed_coords = _embed


def normalize_angle(phi: float) -> float:
    phi = math.fmod(phi, TWO_PI)
    return phi + TWO_PI if phi < 0.0 else phi


def invert(chart: ChartId, x0: float, x1: float) -> ChartPoint:
    """Analytic inverse of the embedding (atan2 / arcsin / log, no iteration)."""
    if chart is ChartId.CARTESIAN:
        return ChartPoint(chart, x0, x1)
    r = math.hypot(x0, x1)
    if r < GUARD:
        raise DomainError("origin is not covered by any angular chart")
    phi = normalize_angle(math.atan2(x1, x0))
    if chart is ChartId.POLAR:
        return ChartPoint(chart, r, phi)
    if chart is ChartId.HOLOGRAPHIC:
        if r > 1.0 - GUARD:
            raise DomainError(f"|x| = {r} outside the open unit disk")
        return ChartPoint(chart, math.asin(r), phi)
    if chart is ChartId.CONFORMAL:
        return ChartPoint(chart, math.log(r), phi)
    raise ValueError(chart)


def basis(p: ChartPoint) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate basis vectors d(embed)/dy_alpha, via dual numbers."""
    validate(p)
    cols = []
    for var in (0, 1):
        args = [p.y0, p.y1]
        args[var] = dual.seed(args[var])
        x0, x1 = _embed(p.chart, *args)
        cols.append(np.array([dual.d1(x0), dual.d1(x1)]))
    return cols[0], cols[1]


def basis_closed_form(p: ChartPoint) -> tuple[np.ndarray, np.ndarray]:
    """Hand-derived basis vectors, kept separate as a cross-check."""
    validate(p)
    if p.chart is ChartId.CARTESIAN:
        return np.array([1.0, 0.0]), np.array([0.0, 1.0])
    c, s = math.cos(p.y1), math.sin(p.y1)
    if p.chart is ChartId.POLAR:
        r = p.y0
        return np.array([c, s]), np.array([-r * s, r * c])
    if p.chart is ChartId.HOLOGRAPHIC:
        ct, st = math.cos(p.y0), math.sin(p.y0)
        return np.array([ct * c, ct * s]), np.array([-st * s, st * c])
    e = math.exp(p.y0)
    return np.array([e * c, e * s]), np.array([-e * s, e * c])


def metric(p: ChartPoint) -> np.ndarray:
    """Gram matrix of the basis vectors (upper curved-index metric)."""
    b0, b1 = basis(p)
    return np.array([[b0 @ b0, b0 @ b1], [b1 @ b0, b1 @ b1]])


def jacobian_lower(p: ChartPoint) -> np.ndarray:
    """Transformation matrix A[mu][alpha] = d x_mu / d y_alpha."""
    b0, b1 = basis(p)
    return np.column_stack([b0, b1])


def jacobian_mixed(p: ChartPoint) -> np.ndarray:
    """A with the curved index lowered by the inverse metric.

    Flat indices are moved with the identity, curved ones with the inverse of
    metric(p); the result satisfies jacobian_lower @ jacobian_mixed.T = id.
    """
    g = metric(p)
    det = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    if abs(det) < 1e-30:
        raise DomainError("metric is singular at this point")
    g_inv = np.array([[g[1, 1], -g[0, 1]], [-g[1, 0], g[0, 0]]]) / det
    return jacobian_lower(p) @ g_inv


def jacobian_mixed_closed_form(p: ChartPoint) -> np.ndarray:
    validate(p)
    if p.chart is ChartId.CARTESIAN:
        return np.eye(2)
    c, s = math.cos(p.y1), math.sin(p.y1)
    if p.chart is ChartId.POLAR:
        r = p.y0
        return np.array([[c, -s / r], [s, c / r]])
    if p.chart is ChartId.HOLOGRAPHIC:
        ct, st = math.cos(p.y0), math.sin(p.y0)
        return np.array([[c / ct, -s / st], [s / ct, c / st]])
    e = math.exp(-p.y0)
    return np.array([[e * c, -e * s], [e * s, e * c]])


@dataclass(frozen=True)
class ConformalVector:
    """Point of the null cone in R^{3,1} representing a plane point."""

    u0: float
    u1: float
    u2: float
    u3: float

    def null_defect(self) -> float:
        return self.u0**2 + self.u1**2 + self.u2**2 - self.u3**2

    def as_array(self) -> np.ndarray:
        return np.array([self.u0, self.u1, self.u2, self.u3])


def compactify(x0: float, x1: float, rescaled: bool = False) -> ConformalVector:
    """Lift a plane point to the null cone.

    Unrescaled: (x0, x1, (1-x^2)/2, (1+x^2)/2).  Rescaled: divided by the
    last component, so u3 = 1 and (u0, u1, u2) lies on the unit sphere.
    """
    xsq = x0 * x0 + x1 * x1
    u = (x0, x1, (1.0 - xsq) / 2.0, (1.0 + xsq) / 2.0)
    if rescaled:
        u = tuple(c / u[3] for c in u)
    return ConformalVector(*u)


def invert_point(x: tuple[float, float]) -> tuple[float, float]:
    """Inversion x -> x/|x|^2; the origin maps to infinity (pole)."""
    nsq = x[0] * x[0] + x[1] * x[1]
    if nsq < GUARD * GUARD:
        raise PoleCrossingError("inversion pole at the origin")
    return (x[0] / nsq, x[1] / nsq)


def special_conformal(
    x: tuple[float, float], c: tuple[float, float]
) -> tuple[float, float]:
    """Inversion, translation by c, inversion again.

    Infinitesimally this is the flow of minus the quadratic generator
    fields: the first-order change in x is -(c0*q0 + c1*q1) evaluated at x.
    Points driven to a pole raise PoleCrossingError instead of overflowing.
    """
    y = invert_point(x)
    y = (y[0] + c[0], y[1] + c[1])
    return invert_point(y)
