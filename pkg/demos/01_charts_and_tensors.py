"""Tour of the four coordinate charts and their tensor data.

Each chart embeds its coordinates into the plane; basis vectors come from
dual-number differentiation of the embedding, and the metric is their Gram
matrix.  The mixed transformation matrix inverts the lower one, which is
what transports vector fields between charts.
"""

import math

import numpy as np

from holoconf.charts import (
    ChartId,
    ChartPoint,
    basis,
    compactify,
    embed,
    invert,
    jacobian_lower,
    jacobian_mixed,
    metric,
    special_conformal,
)

np.set_printoptions(precision=6, suppress=True)

points = {
    ChartId.CARTESIAN: ChartPoint(ChartId.CARTESIAN, 0.6, -0.8),
    ChartId.POLAR: ChartPoint(ChartId.POLAR, 2.0, 0.7),
    ChartId.HOLOGRAPHIC: ChartPoint(ChartId.HOLOGRAPHIC, math.pi / 5, 0.7),
    ChartId.CONFORMAL: ChartPoint(ChartId.CONFORMAL, math.log(2.0), 0.7),
}

for chart, p in points.items():
    x = embed(p)
    print(f"--- {chart} point (y0={p.y0:.4f}, y1={p.y1:.4f})")
    print(f"embeds at x = ({x[0]:.6f}, {x[1]:.6f})")
    b0, b1 = basis(p)
    print("basis vectors:", b0, b1)
    print("metric:")
    print(metric(p))
    a_low, a_mix = jacobian_lower(p), jacobian_mixed(p)
    print("A_lower @ A_mixed^T (should be the identity):")
    print(a_low @ a_mix.T)
    q = invert(chart, *x)
    print(f"inverse chart map recovers (y0={q.y0:.6f}, y1={q.y1:.6f})")
    print()

print("--- conformal compactification")
for x in ((0.0, 0.0), (1.0, 0.0), (0.3, -1.2)):
    u = compactify(*x, rescaled=True)
    print(
        f"x={x} -> u=({u.u0:.4f}, {u.u1:.4f}, {u.u2:.4f}, {u.u3:.1f}),"
        f" null defect {u.null_defect():.2e}"
    )

print()
print("--- special conformal transformation as invert-translate-invert")
x, c = (0.0, 2.0), (0.0, -0.25)
print(f"x={x}, c={c} -> {special_conformal(x, c)}")
eps = 1e-4
moved = special_conformal((1.0, 0.0), (eps, 0.0))
print(f"infinitesimal c=({eps},0) at (1,0): moved to {moved}")
print("first-order change is -eps * (x0^2 - x1^2, 2 x0 x1) =", (-eps, 0.0))
