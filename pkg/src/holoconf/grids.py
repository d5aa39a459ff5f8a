"""CSV sample grids for offline plotting (no plotting here)."""

from __future__ import annotations

import cmath
import csv
import math

from .algebra import B, S01, cn, sn
from .projective import Ring, S3Point, exp_one_param, hopf, mobius_apply

GRID_KINDS = ("joukowski", "hopf-fibers", "conformal-flow")


def _joukowski_rows(resolution: int):
    yield ("radius", "phi", "u_re", "u_im", "cn_re", "cn_im", "sn_re", "sn_im")
    for radius in (1.0, 1.1, 1.3, 1.6, 2.0):
        for k in range(resolution):
            phi = 2.0 * math.pi * k / resolution
            u = radius * cmath.exp(1j * phi)
            c, s = cn(u), sn(u)
            yield (radius, phi, u.real, u.imag, c.real, c.imag, s.real, s.imag)


def _fiber_seed(xi1: float, xi2: float, xi3: float) -> S3Point:
    # one preimage of the base point (formula valid away from the south pole)
    v1 = math.sqrt((1.0 + xi3) / 2.0)
    v2 = complex(xi1, -xi2) / (2.0 * v1)
    return S3Point(v1, 0.0, v2.real, v2.imag)


def _hopf_rows(resolution: int):
    yield ("xi1", "xi2", "xi3", "lam", "s1", "s2", "s3", "s4")
    bases = ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.6, 0.0, 0.8), (0.0, 0.8, 0.6))
    for base in bases:
        seeded = _fiber_seed(*base)
        for k in range(resolution):
            lam = 2.0 * math.pi * k / resolution
            pt = seeded.phase_rotated(lam)
            mapped = hopf(pt)
            yield (mapped.xi1, mapped.xi2, mapped.xi3, lam) + pt.components()


def _conformal_flow_rows(resolution: int):
    yield ("generator", "eps", "u0_re", "u0_im", "u_re", "u_im")
    starts = (0.5 + 0j, 0.3 + 0.4j, -0.6 + 0.2j, 1j)
    for g in (B, S01):
        for u0 in starts:
            for k in range(resolution):
                eps = -1.0 + 2.0 * k / (resolution - 1)
                u = mobius_apply(exp_one_param(g, eps, Ring.COMPLEX), u0)
                yield (g.value, eps, u0.real, u0.imag, u.real, u.imag)


def emit_grid(kind: str, resolution: int, path: str) -> int:
    """Write the named sample grid as CSV; returns the number of data rows."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    rows = {
        "joukowski": _joukowski_rows,
        "hopf-fibers": _hopf_rows,
        "conformal-flow": _conformal_flow_rows,
    }
    if kind not in rows:
        raise ValueError(f"unknown grid kind {kind!r}; choose from {GRID_KINDS}")
    count = -1  # header excluded
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in rows[kind](resolution):
            writer.writerow(row)
            count += 1
    return count
