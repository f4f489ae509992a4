"""Smoke tests for the Python bindings."""

import math

import pytest

import cvren


def test_constants():
    assert cvren.kappa(0.0) == pytest.approx(math.e, abs=1e-12)
    assert cvren.kappa(1.0) == pytest.approx(2.0, abs=1e-12)
    assert cvren.big_k(0.5) == pytest.approx(2.598076, abs=1e-6)
    assert cvren.conjugate_index(0.5) == pytest.approx(-1.0)
    assert cvren.conjugate_index(1.0) == math.inf
    assert cvren.criterion_bound(2, 0.0) == pytest.approx(
        math.log(2 * math.e * math.pi), abs=1e-12
    )
    assert abs(cvren.constant_identity_residual(3, 0.4)) < 1e-10


def test_densities_and_entropies():
    gauss = cvren.AnalyticDensity.gaussian(0.0, 0.5)
    assert cvren.lp_functional(gauss, 1.0) == pytest.approx(1.0, abs=1e-9)
    assert cvren.shannon_differential(gauss) == pytest.approx(
        0.5 * math.log(math.pi * math.e), abs=1e-9
    )
    wide = cvren.convolve(gauss, gauss)
    assert cvren.renyi_differential(wide, 2.0) == pytest.approx(
        0.5 * math.log(2 * math.pi) + 0.5 * math.log(2.0), abs=1e-9
    )
    assert cvren.lp_functional(gauss, math.inf) == pytest.approx(
        1.0 / math.sqrt(math.pi), abs=1e-9
    )
    grid = cvren.GridDensity.sample(gauss, 1e-3)
    assert cvren.lp_functional_grid(grid, 2.0) == pytest.approx(
        cvren.lp_functional(gauss, 2.0), rel=1e-6
    )
    back = cvren.GridDensity.from_csv(grid.to_csv())
    assert back.spacing == pytest.approx(grid.spacing)


def test_vacuum_saturates_prop1():
    vacuum = cvren.CoherentProduct([0j, 0j])
    pair = cvren.marginal_pair(vacuum, cvren.QuadratureConfig.standard(2))
    for t in (0.0, 0.3, 0.7):
        report = cvren.check_prop1(pair, 2, t)
        assert abs(report.margin) < 1e-8


def test_cat_state_detection():
    cat = cvren.DephasedCat(4, 3.0, 0.5)
    pair = cvren.marginal_pair(cat, cvren.QuadratureConfig.standard(4))
    report = cvren.check_prop1(pair, 4, 0.5, swapped=True)
    assert report.violated
    q2 = cvren.q_characteristic(cvren.DephasedCat(4, 0.0, 0.5), 2.0)
    assert q2(3.0) == pytest.approx(-report.margin, abs=1e-10)
    assert q2(0.15) < 0.0


def test_antisym_curve():
    a_curve = cvren.a_characteristic(cvren.AntisymCatPure(2, 1.0))
    assert a_curve(3.0) == pytest.approx(math.log(2.0), abs=1e-2)
    assert cvren.normalization_factor(cvren.AntisymCatPure(2, 1.0)) == pytest.approx(
        1.0 / (2.0 - 2.0 * math.exp(-4.0)), abs=1e-12
    )


def test_binning_and_inefficiency():
    gauss = cvren.AnalyticDensity.gaussian(0.0, 1.0)
    grid = cvren.BinGrid.uniform(-10.0, 10.0, 100)
    binned = cvren.sample_into_bins(gauss, grid)
    assert sum(binned.probabilities.probabilities) == pytest.approx(1.0, abs=1e-9)
    hist = cvren.histogram_density(binned)
    assert hist(0.05) > hist(3.0)
    q = cvren.DiscreteDistribution([0.25, 0.5, 0.25])
    distorted = cvren.apply_inefficiency(q, 0.73)
    assert cvren.shannon_discrete(distorted) == pytest.approx(
        0.73 * cvren.shannon_discrete(q) + cvren.binary_entropy(0.73), abs=1e-12
    )


def test_figure_table():
    table = cvren.compute_figure("fig3", threads=2)
    assert table.labels == ["A_n2", "A_n4", "A_n6", "A_n8"]
    assert len(table.x) == 160
    assert table.to_csv().splitlines()[0] == "z,A_n2,A_n4,A_n6,A_n8"
    # Every curve ends near ln 2.
    for column in table.columns:
        assert column[-1] == pytest.approx(math.log(2.0), abs=5e-3)


def test_fourier_pair_check():
    report = cvren.fourier_pair_check(0, 2.0, 2.0 / 3.0)
    assert abs(report.margin) < 1e-9
    report = cvren.fourier_pair_check(2, 2.0, 2.0 / 3.0)
    assert report.margin > 0.0
