"""Spin matrices, their one-parameter flows, and grid emission.

Matrix commutators over the real ring realize the table with the opposite
signs of the field realization; over the bicomplex ring the table holds
exactly as written.  Exponentiated matrices act on the line by
fractional-linear maps that agree with the field flows to second order.
"""

import tempfile
from pathlib import Path

from holoconf.algebra import B, GENERATORS, P0, Q0, S01, UPSILON_LINE, structure_table
from holoconf.grids import emit_grid
from holoconf.projective import (
    Ring,
    exp_one_param,
    flow_consistency,
    matrix_bracket_table,
    matrix_rep,
    mobius_apply,
)

print("--- generator matrices")
for ring in (Ring.REAL, Ring.COMPLEX, Ring.BICOMPLEX):
    gens = (B, P0, Q0) if ring is Ring.REAL else (B, S01, P0, Q0)
    print(f"[{ring.value}]")
    for g in gens:
        m = matrix_rep(g, ring)
        print(f"  {g.value:4s} = (({m.a}, {m.b}), ({m.c}, {m.d}))")

print()
print("--- sign ledgers: matrices vs vector fields")
for ring in (Ring.REAL, Ring.COMPLEX, Ring.BICOMPLEX):
    led = matrix_bracket_table(ring)
    negated = sorted(k for k, s in led.signs.items() if s == -1)
    print(f"matrix/{ring.value:9s} negated: {negated if negated else 'none'}")
field_led = structure_table(UPSILON_LINE)
print("field/upsilon     negated:", sorted(k for k, s in field_led.signs.items() if s == -1))

print()
print("--- Mobius flows vs first-order field steps")
v0 = 0.5 + 0j
for g in GENERATORS:
    eps = 1e-3
    d1 = flow_consistency(g, v0, eps)
    d2 = flow_consistency(g, v0, eps / 2)
    tag = "exact" if d1 < 1e-13 else f"ratio {d1 / d2:.3f}"
    print(f"{g.value:4s} defect(1e-3) = {d1:.3e}   {tag}")

print()
print("--- a finite special-conformal flow has a pole")
m = exp_one_param(Q0, 2.0, Ring.COMPLEX)  # v -> v / (1 - 2 v)
print("exp(2 q0) moves 0.25 to", mobius_apply(m, 0.25 + 0j))
try:
    mobius_apply(m, 0.5 + 0j)
except Exception as exc:
    print("at v = 0.5 the denominator vanishes:", type(exc).__name__)

print()
print("--- CSV grids for offline plotting")
with tempfile.TemporaryDirectory() as tmp:
    for kind in ("joukowski", "hopf-fibers", "conformal-flow"):
        path = Path(tmp) / f"{kind}.csv"
        rows = emit_grid(kind, 24, str(path))
        header = path.read_text().splitlines()[0]
        print(f"{kind:15s} {rows:4d} rows   header: {header}")
