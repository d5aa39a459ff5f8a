"""Rescaled operators, solution residuals, harmonic correspondence."""

import cmath
import math
import random

import pytest

from holoconf import laplace
from holoconf.charts import ChartId, ChartPoint, embed, embed_coords, invert
from holoconf.laplace import (
    ScalarField,
    SolutionFamily,
    conjugate_derivative,
    laplacian,
    residual,
    solve,
    ylm,
    ylm_ratio,
)
from holoconf.sampling import chart_points, scale_dimensions

RNG = random.Random(31)


def test_laplacian_examples():
    harmonic = ScalarField(lambda x0, x1: x0 * x0 - x1 * x1)
    p = ChartPoint(ChartId.CARTESIAN, 0.7, -1.2)
    assert abs(laplacian(ChartId.CARTESIAN, harmonic, p)) <= 1e-13

    # (r d/dr)^2 r^2 = 4 r^2 = 16 at r = 2
    f = ScalarField(lambda r, phi: r * r)
    p = ChartPoint(ChartId.POLAR, 2.0, 0.0)
    assert laplacian(ChartId.POLAR, f, p) == pytest.approx(16.0, abs=1e-12)

    p = ChartPoint(ChartId.HOLOGRAPHIC, math.pi / 4, 0.3)
    u2 = SolutionFamily(2.0, ChartId.HOLOGRAPHIC)
    assert abs(laplacian(ChartId.HOLOGRAPHIC, u2, p)) <= 1e-12


def test_solve_examples():
    v = solve(1.0, ChartId.HOLOGRAPHIC, ChartPoint(ChartId.HOLOGRAPHIC, 1.5707, 0.0))
    assert v == pytest.approx(1.0, abs=1e-7)
    v = solve(2.0, ChartId.POLAR, ChartPoint(ChartId.POLAR, 2.0, math.pi / 2))
    assert v == pytest.approx(-4.0, abs=1e-12)
    v = solve(1.0, ChartId.CONFORMAL, ChartPoint(ChartId.CONFORMAL, 0.0, math.pi))
    assert v == pytest.approx(-1.0, abs=1e-12)


def test_residual_examples():
    p = chart_points(ChartId.HOLOGRAPHIC, 1, RNG)[0]
    u = solve(3.0, ChartId.HOLOGRAPHIC, p)
    assert residual(3.0, ChartId.HOLOGRAPHIC, p) <= 1e-10 * (1 + abs(u))

    q = chart_points(ChartId.POLAR, 1, RNG)[0]
    alpha = 0.5 + 0.25j
    u = solve(alpha, ChartId.POLAR, q)
    assert residual(alpha, ChartId.POLAR, q) <= 1e-10 * (1 + abs(u))

    for chart in (ChartId.CARTESIAN, ChartId.POLAR, ChartId.HOLOGRAPHIC, ChartId.CONFORMAL):
        r = chart_points(chart, 1, RNG)[0]
        assert residual(0.0, chart, r) == 0.0


def test_residual_random_alphas_all_charts():
    rng = random.Random(32)
    for chart in (ChartId.CARTESIAN, ChartId.POLAR, ChartId.HOLOGRAPHIC, ChartId.CONFORMAL):
        pts = chart_points(chart, 3, rng)
        for alpha in scale_dimensions(25, rng):
            for p in pts:
                u = solve(alpha, chart, p)
                assert residual(alpha, chart, p) <= 1e-10 * (1 + abs(u))


def test_conjugate_branch_solution():
    # e^{-i a phi} r^a solves the equation too (m = -l branch for integers)
    rng = random.Random(33)
    for p in chart_points(ChartId.HOLOGRAPHIC, 5, rng):
        f = SolutionFamily(2.0, ChartId.HOLOGRAPHIC, conjugate_branch=True)
        assert abs(laplacian(ChartId.HOLOGRAPHIC, f, p)) <= 1e-11
        expected = cmath.exp(-2j * p.y1) * math.sin(p.y0) ** 2
        assert f(p.y0, p.y1) == pytest.approx(expected, abs=1e-13)


def test_rescaled_vs_standard_factor():
    # polar operator = r^2 * flat Laplacian (similarly sin^2 theta, e^{2 rho})
    rng = random.Random(34)
    poly = lambda x0, x1: x0**3 - 2 * x0 * x1 * x1 + 0.5 * x0 * x1 + x1 * x1
    for chart in (ChartId.POLAR, ChartId.HOLOGRAPHIC, ChartId.CONFORMAL):
        for p in chart_points(chart, 20, rng):
            pulled = lambda y0, y1, c=chart: poly(*embed_coords(c, y0, y1))
            lhs = laplacian(chart, pulled, p)
            x0, x1 = embed(p)
            flat = laplacian(
                ChartId.CARTESIAN, poly, ChartPoint(ChartId.CARTESIAN, x0, x1)
            )
            rhs = laplace.rescale_factor(chart, p) * flat
            assert abs(lhs - rhs) <= 1e-10 * (1 + abs(rhs))


def test_chart_consistency_of_solutions():
    rng = random.Random(35)
    pts = chart_points(ChartId.HOLOGRAPHIC, 25, rng)
    alphas = scale_dimensions(25, rng)
    for p, alpha in zip(pts, alphas):
        x0, x1 = embed(p)
        ref = solve(alpha, ChartId.HOLOGRAPHIC, p)
        for chart in (ChartId.CARTESIAN, ChartId.POLAR, ChartId.CONFORMAL):
            q = invert(chart, x0, x1)
            assert solve(alpha, chart, q) == pytest.approx(ref, abs=1e-10 * (1 + abs(ref)))


def test_ylm_ratio_constants():
    rng = random.Random(36)
    grid = chart_points(ChartId.HOLOGRAPHIC, 20, rng)
    # closed forms: Y_1^1 = -sqrt(3/8pi) sin(t) e^{i p}, Y_2^2 = (1/4) sqrt(15/2pi) sin^2 ...
    assert ylm_ratio(1, grid) == pytest.approx(-math.sqrt(3 / (8 * math.pi)), abs=1e-12)
    assert ylm_ratio(2, grid) == pytest.approx(
        0.25 * math.sqrt(15 / (2 * math.pi)), abs=1e-12
    )
    assert ylm_ratio(3, grid) == pytest.approx(
        -0.125 * math.sqrt(35 / math.pi), abs=1e-12
    )
    assert ylm_ratio(4, grid) == pytest.approx(
        (3 / 16) * math.sqrt(35 / (2 * math.pi)), abs=1e-12
    )
    # mirror branch pairs with the m = -l harmonics
    assert ylm_ratio(1, grid, negative_branch=True) == pytest.approx(
        math.sqrt(3 / (8 * math.pi)), abs=1e-12
    )


def test_ylm_ratio_errors():
    rng = random.Random(37)
    grid = chart_points(ChartId.HOLOGRAPHIC, 5, rng)
    with pytest.raises(ValueError):
        ylm_ratio(0, grid)
    with pytest.raises(ValueError):
        ylm_ratio(1, [])
    with pytest.raises(ValueError):
        ylm_ratio(1, [ChartPoint(ChartId.POLAR, 1.0, 0.0)])


def test_ylm_values():
    # Y_0^0 is the constant normalization
    assert ylm(0, 0, 0.7, 1.1) == pytest.approx(0.5 / math.sqrt(math.pi))
    # conjugation identity between +-m
    y = ylm(3, 2, 0.9, 0.4)
    assert ylm(3, -2, 0.9, 0.4) == pytest.approx(y.conjugate(), abs=1e-14)
    with pytest.raises(ValueError):
        ylm(1, 2, 0.5, 0.5)


def test_holomorphy_annihilation():
    rng = random.Random(38)
    pts = chart_points(ChartId.CARTESIAN, 20, rng)
    for alpha in scale_dimensions(20, rng):
        for p in pts[:5]:
            f = SolutionFamily(alpha, ChartId.CARTESIAN)
            d = conjugate_derivative(f, p.y0, p.y1)
            assert abs(d) <= 1e-10 * (1 + abs(alpha) * abs(f(p.y0, p.y1)))
