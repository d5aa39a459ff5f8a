"""Bicomplex arithmetic and its route to the quadratic sphere map.

The null-plane units o, obar are zero divisors satisfying two complementary
rule sets at once; the two involutions of the ring project a bicomplex
number onto exactly the coordinates of the sphere map applied to its four
components.
"""

import random

from holoconf import bicomplex as bc
from holoconf.bicomplex import Bicomplex
from holoconf.projective import S3Point, hopf, hopf_raw

o, obar = bc.null_plane_units()
print("o     =", o)
print("obar  =", obar)
print("o*o   =", o * o, "   (equals i*o and j*o)")
print("i*o   =", bc.UNIT_I * o)
print("j*o   =", bc.UNIT_J * o)
print("o*obar =", o * obar)
print("o*o - obar*obar =", o * o - obar * obar, "  (the hyperbolic unit)")
print()

s = Bicomplex(0.6, -0.3, 0.5, 0.8)
print("s             =", s)
print("s * conj(s)   =", s * s.conjugate(), "  -> (xi3, xi1) in (1, j)")
print("s * rev(s)    =", s * s.reverse(), "  -> (|s|^2, -xi2) in (1, ij)")
t = bc.involution_projections(s)
print(f"projections: xi = ({t.xi1:.4f}, {t.xi2:.4f}, {t.xi3:.4f}), |s|^2 = {t.len_sq:.4f}")
print("sphere map of the components:", hopf_raw(s.re, s.im_i, s.im_j, s.im_ij))
print()

print("--- the image length is the squared input length")
rng = random.Random(1)
for _ in range(3):
    raw = [rng.uniform(-1.5, 1.5) for _ in range(4)]
    xi = hopf_raw(*raw)
    nsq = sum(c * c for c in raw)
    print(f"|s|^2 = {nsq:.6f}   |xi| = {sum(x * x for x in xi) ** 0.5:.6f}")
print()

print("--- phase fibers collapse to one base point")
p = S3Point(0.5, 0.1, -0.7, 0.2)
base = hopf(p)
print(f"base point ({base.xi1:.6f}, {base.xi2:.6f}, {base.xi3:.6f})")
for lam in (0.9, 2.2, 4.5):
    q = hopf(p.phase_rotated(lam))
    print(f"lam={lam}: ({q.xi1:.6f}, {q.xi2:.6f}, {q.xi3:.6f})")
print()

print("--- exponential through the idempotent split")
a = 0.3 * bc.UNIT_IJ
print("exp(0.3 ij) =", a.exp(), "  (cosh 0.3 + ij sinh 0.3)")
b = 0.25 * bc.UNIT_I + 0.4 * bc.UNIT_J
print("exp(a)exp(b) - exp(a+b) =", (a.exp() * b.exp() - (a + b).exp()))
