"""Spin matrices, Mobius action, one-parameter subgroups, sphere map."""

import cmath
import math
import random

import pytest

from holoconf import bicomplex as bc
from holoconf.algebra import (
    B,
    P0,
    P1,
    Q0,
    Q1,
    S01,
    GENERATORS,
    UPSILON_LINE,
    structure_table,
)
from holoconf.bicomplex import Bicomplex, involution_projections
from holoconf.projective import (
    EXPECTED_MATRIX_SIGNS,
    NullLinePoleError,
    PoleError,
    ProjectivePoint,
    Ring,
    S3Point,
    SpinMatrix,
    UnsupportedGeneratorError,
    chart_transition,
    commutator,
    exp_one_param,
    flow_consistency,
    hopf,
    hopf_raw,
    identity,
    matrix_bracket_table,
    matrix_rep,
    mobius_apply,
    projectively_equal,
)


def test_matrix_rep_examples():
    b = matrix_rep(B, Ring.REAL)
    assert b.entries() == (0.5, 0.0, 0.0, -0.5)
    s01 = matrix_rep(S01, Ring.COMPLEX)
    assert s01.entries() == (0.5j, 0j, 0j, -0.5j)
    p0 = matrix_rep(P0, Ring.BICOMPLEX)
    o, obar = bc.null_plane_units()
    assert p0.a == bc.ZERO and p0.d == bc.ZERO
    assert p0.b == o
    assert p0.c == -1 * obar
    q0 = matrix_rep(Q0, Ring.BICOMPLEX)
    assert q0.b == obar and q0.c == -1 * o


def test_matrix_rep_unsupported():
    for g in (S01, P1, Q1):
        with pytest.raises(UnsupportedGeneratorError):
            matrix_rep(g, Ring.REAL)


def test_bicomplex_brackets_exact():
    led = matrix_bracket_table(Ring.BICOMPLEX)
    assert led.signs == EXPECTED_MATRIX_SIGNS[Ring.BICOMPLEX]
    assert led.max_defect == 0.0
    # [q0, p0] = ij * diag(1, -1) = 2b
    q0 = matrix_rep(Q0, Ring.BICOMPLEX)
    p0 = matrix_rep(P0, Ring.BICOMPLEX)
    got = commutator(q0, p0)
    assert got.a == bc.UNIT_IJ
    assert got.d == -1 * bc.UNIT_IJ
    assert got.b == bc.ZERO and got.c == bc.ZERO
    twice_b = matrix_rep(B, Ring.BICOMPLEX).scaled(2.0)
    assert got.max_abs_diff(twice_b) == 0.0


def test_real_ledger_negates_field_ledger():
    led = matrix_bracket_table(Ring.REAL)
    assert led.signs == {"[b,p0]": -1, "[b,q0]": -1, "[q0,p0]": 1}
    field_led = structure_table(UPSILON_LINE)
    for key, sign in led.signs.items():
        assert sign == -field_led.signs[key]


def test_complex_ledger():
    led = matrix_bracket_table(Ring.COMPLEX)
    assert led.signs == EXPECTED_MATRIX_SIGNS[Ring.COMPLEX]
    assert led.max_defect <= 1e-15


def test_generator_matrices_traceless():
    for ring in Ring:
        gens = (B, P0, Q0) if ring is Ring.REAL else GENERATORS
        for g in gens:
            tr = matrix_rep(g, ring).trace()
            if isinstance(tr, Bicomplex):
                assert tr.max_abs() == 0.0
            else:
                assert abs(tr) == 0.0


def test_mobius_examples():
    ident = identity(Ring.COMPLEX)
    assert mobius_apply(ident, 0.37 + 0.2j) == pytest.approx(0.37 + 0.2j)
    m = SpinMatrix(Ring.COMPLEX, 1 + 0j, 0j, -0.01 + 0j, 1 + 0j)
    assert mobius_apply(m, 0.5 + 0j) == pytest.approx(0.5 / (1 - 0.005), abs=1e-14)
    m = SpinMatrix(Ring.COMPLEX, 0j, 1 + 0j, -1 + 0j, 0j)
    assert mobius_apply(m, 2.0 + 0j) == pytest.approx(-0.5)


def test_mobius_pole():
    m = SpinMatrix(Ring.COMPLEX, 1 + 0j, 0j, 1 + 0j, -2 + 0j)
    with pytest.raises(PoleError):
        mobius_apply(m, 2.0 + 0j)


def test_mobius_bicomplex_and_null_pole():
    # scale flow with the hyperbolic unit in the exponent
    eps = 0.4
    m = exp_one_param(B, eps, Ring.BICOMPLEX)
    v = Bicomplex(0.7, 0.1, -0.2, 0.05)
    moved = mobius_apply(m, v)
    expected = (eps * bc.UNIT_IJ).exp() * v
    assert (moved - expected).max_abs() <= 1e-13

    o, _ = bc.null_plane_units()
    null_den = SpinMatrix(Ring.BICOMPLEX, bc.ONE, bc.ZERO, bc.ZERO, o)
    with pytest.raises(NullLinePoleError):
        mobius_apply(null_den, Bicomplex(0.3))
    zero_den = SpinMatrix(Ring.BICOMPLEX, bc.ONE, bc.ZERO, bc.ZERO, bc.ZERO)
    with pytest.raises(PoleError):
        mobius_apply(zero_den, Bicomplex(0.3))


def test_mobius_group_action():
    rng = random.Random(51)
    for _ in range(40):
        g1, g2 = rng.sample(GENERATORS, 2)
        m = exp_one_param(g1, rng.uniform(-0.7, 0.7), Ring.COMPLEX)
        n = exp_one_param(g2, rng.uniform(-0.7, 0.7), Ring.COMPLEX)
        v = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        try:
            lhs = mobius_apply(m @ n, v)
            rhs = mobius_apply(m, mobius_apply(n, v))
        except PoleError:
            continue
        assert lhs == pytest.approx(rhs, abs=1e-11)


def test_exp_one_param_closed_forms():
    eps = 0.52
    m = exp_one_param(S01, eps, Ring.COMPLEX)
    assert m.a == pytest.approx(cmath.exp(1j * eps / 2))
    assert m.d == pytest.approx(cmath.exp(-1j * eps / 2))
    assert m.b == 0j and m.c == 0j

    mb = exp_one_param(B, eps, Ring.BICOMPLEX)
    want = Bicomplex(math.cosh(eps / 2), 0, 0, math.sinh(eps / 2))
    assert (mb.a - want).max_abs() <= 1e-14
    assert (mb.d - want.conjugate()).max_abs() <= 1e-14

    mp = exp_one_param(P0, eps, Ring.REAL)
    assert mp.entries() == (1.0, eps, 0.0, 1.0)

    with pytest.raises(UnsupportedGeneratorError):
        exp_one_param(S01, eps, Ring.REAL)


def test_exp_determinant_is_one():
    for ring in Ring:
        gens = (B, P0, Q0) if ring is Ring.REAL else GENERATORS
        for g in gens:
            for eps in (0.3, -1.1, 1e-4):
                det = exp_one_param(g, eps, ring).det()
                if isinstance(det, Bicomplex):
                    assert (det - bc.ONE).max_abs() <= 1e-13
                else:
                    assert abs(det - 1.0) <= 1e-13


def test_flow_consistency_values():
    # defect for the quadratic generator is eps^2 v0^3 to leading order
    d = flow_consistency(Q0, 0.5 + 0j, 1e-3)
    assert d == pytest.approx(1.25e-7, abs=1e-10)
    assert flow_consistency(B, 1.0 + 0j, 0.0) == 0.0
    # translations are exact at every order
    assert flow_consistency(P0, 0.8 + 0.1j, 1e-3) <= 1e-15
    assert flow_consistency(P1, 0.8 + 0.1j, 1e-3) <= 1e-15


def test_flow_consistency_richardson():
    rng = random.Random(52)
    for g in GENERATORS:
        for _ in range(10):
            v0 = complex(rng.uniform(0.2, 1.0), rng.uniform(-0.5, 0.5))
            d1 = flow_consistency(g, v0, 1e-3)
            d2 = flow_consistency(g, v0, 5e-4)
            if d1 <= 1e-13 and d2 <= 1e-13:
                continue  # exact flow
            assert 3.8 <= d1 / d2 <= 4.2


def test_hopf_examples():
    t = hopf(S3Point(1, 0, 0, 0))
    assert (t.xi1, t.xi2, t.xi3) == pytest.approx((0, 0, 1))
    t = hopf(S3Point(0, 0, 1, 0))
    assert (t.xi1, t.xi2, t.xi3) == pytest.approx((0, 0, -1))
    t = hopf(S3Point(1, 0, 1, 0))  # constructor normalizes
    assert (t.xi1, t.xi2, t.xi3) == pytest.approx((1, 0, 0))
    with pytest.raises(ValueError):
        S3Point(0, 0, 0, 0)


def test_hopf_norm_and_fiber():
    rng = random.Random(53)
    for _ in range(100):
        raw = [rng.uniform(-2, 2) for _ in range(4)]
        if sum(abs(c) for c in raw) < 0.1:
            continue
        xi = hopf_raw(*raw)
        nsq = sum(c * c for c in raw)
        # squared input length, not the length itself
        assert math.sqrt(sum(x * x for x in xi)) == pytest.approx(nsq, abs=1e-12 * (1 + nsq))
        s = S3Point(*raw)
        base = hopf(s)
        lam = rng.uniform(0, 2 * math.pi)
        rotated = hopf(s.phase_rotated(lam))
        assert (rotated.xi1, rotated.xi2, rotated.xi3) == pytest.approx(
            (base.xi1, base.xi2, base.xi3), abs=1e-12
        )


def test_hopf_agrees_with_involution_projections():
    rng = random.Random(54)
    for _ in range(100):
        raw = [rng.uniform(-2, 2) for _ in range(4)]
        t = involution_projections(Bicomplex(*raw))
        xi = hopf_raw(*raw)
        assert (t.xi1, t.xi2, t.xi3) == pytest.approx(xi, abs=1e-12)
        assert t.len_sq == pytest.approx(sum(c * c for c in raw), abs=1e-12)


def test_chart_transition():
    tr = chart_transition(ProjectivePoint(1 + 0j, 1 + 0j))
    assert tr.in_overlap
    assert tr.transition == pytest.approx(1.0)
    tr = chart_transition(ProjectivePoint(1j, 1 + 0j))
    assert tr.transition == pytest.approx(1j)
    assert tr.affine0 == (1j, 1 + 0j)
    tr = chart_transition(ProjectivePoint(2 + 0j, 0j))
    assert not tr.in_overlap
    assert tr.affine0 is None
    assert tr.affine1 == (1 + 0j, 0j)
    with pytest.raises(ValueError):
        ProjectivePoint(0j, 0j)


def test_transition_unit_modulus_random():
    rng = random.Random(55)
    for _ in range(50):
        v1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        v2 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(v1) < 1e-2 or abs(v2) < 1e-2:
            continue
        tr = chart_transition(ProjectivePoint(v1, v2))
        assert abs(tr.transition) == pytest.approx(1.0, abs=1e-13)


def test_projective_equality():
    p = ProjectivePoint(1 + 2j, 3 - 1j)
    q = ProjectivePoint((1 + 2j) * (0.3 - 0.9j), (3 - 1j) * (0.3 - 0.9j))
    assert projectively_equal(p, q)
    assert not projectively_equal(p, ProjectivePoint(1 + 0j, 1 + 0j))
