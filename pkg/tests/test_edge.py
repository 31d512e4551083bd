"""
Test the Airy function, the Painleve II solver and Tracy-Widom F2
"""
import logging
import math

import numpy as np
import pytest
from scipy import special

from rmt_lab.core.errors import DomainError, ParameterError
from rmt_lab.edge.airy import airy, airy_pair, airy_prime
from rmt_lab.edge.painleve import painleve2_solve
from rmt_lab.edge.statistics import edge_statistic_mc, rescaled_hermite
from rmt_lab.edge.tracy_widom import (
    build_f2_table,
    default_f2_table,
    f2_cdf,
    f2_density,
    f2_moments,
    f2_quantile,
    fredholm_f2,
    tail_bound,
)
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec, EntryLaw


@pytest.fixture(scope="module")
def table():
    return default_f2_table()


# ---------------------------------------------------------------- Airy


def test_airy_at_zero():
    assert airy(0.0) == pytest.approx(0.355028053887817, abs=1e-14)
    assert airy_prime(0.0) == pytest.approx(-0.258819403792807, abs=1e-14)


def test_airy_matches_reference_on_window():
    x = np.linspace(-15, 15, 301)
    ai, aip = airy_pair(x)
    ref_ai, ref_aip, _, _ = special.airy(x)
    assert np.max(np.abs(ai - ref_ai)) <= 1e-8
    assert np.max(np.abs(aip - ref_aip)) <= 1e-7


def test_airy_asymptotic_regime():
    leading = 8.0**-0.25 * math.exp(-2.0 / 3.0 * 8.0**1.5) / (2 * math.sqrt(math.pi))
    assert abs(airy(8.0) / leading - 1) <= 0.01


def test_airy_differential_equation():
    h = 1e-3
    x = np.linspace(-5, 5, 101)
    second = (airy(x + h) - 2 * airy(x) + airy(x - h)) / h**2
    assert np.max(np.abs(second - x * airy(x))) <= 1e-5


def test_airy_outside_window():
    with pytest.raises(DomainError):
        airy(15.5)
    with pytest.raises(DomainError):
        airy_prime(np.array([0.0, -20.0]))


# ---------------------------------------------------------------- Painleve II


def test_painleve_solution_follows_airy_on_the_right():
    solution = painleve2_solve()
    assert np.all(solution.q > 0)
    i = int(np.argmin(np.abs(solution.x - 6.0)))
    assert abs(solution.q[i] - airy(solution.x[i])) / airy(solution.x[i]) <= 1e-3
    right = (solution.x >= 6.0) & (solution.x <= 8.0)
    ratio = solution.q[right] / airy(solution.x[right])
    assert np.max(np.abs(ratio - 1)) <= 1e-3


def test_painleve_residual():
    solution = painleve2_solve()
    h = solution.step
    x, q = solution.x, solution.q
    inside = (x[1:-1] >= -6.0) & (x[1:-1] <= 6.0)
    second = (q[2:] - 2 * q[1:-1] + q[:-2]) / h**2
    residual = second - x[1:-1] * q[1:-1] - 2 * q[1:-1] ** 3
    assert np.max(np.abs(residual[inside])) <= 1e-4


def test_painleve_step_halving():
    solution = painleve2_solve(verify=True)
    assert solution.metadata["halving_error"] <= 1e-6


def test_painleve_rejects_bad_boundaries():
    with pytest.raises(ParameterError):
        painleve2_solve(x0=5.0)
    with pytest.raises(ParameterError):
        painleve2_solve(x_min=-2.0)
    with pytest.raises(ParameterError):
        painleve2_solve(step=0.0)


# ---------------------------------------------------------------- F2


def test_f2_table_shape_and_ends(table):
    assert table.t[0] == -6.0 and table.t[-1] == 5.0
    assert len(table.t) == 1101
    assert np.all(np.diff(table.values) >= 0)
    assert table.values[0] < 0.01
    assert f2_cdf(table, 5.0) >= 0.999
    assert table.to_rows()[0] == ["t", "F2"]


def test_f2_median_and_moments(table):
    median = f2_quantile(table, 0.5)
    assert -1.85 <= median <= -1.75
    mean, variance = f2_moments(table)
    assert mean == pytest.approx(-1.7711, abs=0.01)
    assert variance == pytest.approx(0.8132, abs=0.01)
    assert f2_density(table, median) > 0


def test_f2_right_tail_against_bound(table):
    for t in (2.0, 3.0, 4.0):
        assert 1 - f2_cdf(table, t) <= 1.5 * tail_bound(t)


def test_f2_clamps_outside_grid(table, caplog):
    assert not table.covers(7.0)
    with caplog.at_level(logging.WARNING):
        assert f2_cdf(table, 7.0) == pytest.approx(table.values[-1])
    assert "clamping" in caplog.text


@pytest.mark.parametrize("t", [-1.0, 0.0, 1.0, 2.0])
def test_fredholm_series_cross_check(table, t):
    assert abs(fredholm_f2(t, order=3) - f2_cdf(table, t)) <= 1e-5


@pytest.mark.parametrize("t", [-3.0, -2.0, 0.0, 2.0])
def test_fredholm_determinant_cross_check(table, t):
    assert abs(fredholm_f2(t, order=None) - f2_cdf(table, t)) <= 1e-6


def test_fredholm_arguments():
    assert fredholm_f2(0.0, order=0) == 1.0
    with pytest.raises(ParameterError):
        fredholm_f2(4.0)
    with pytest.raises(ParameterError):
        fredholm_f2(0.0, order=5)


@pytest.mark.slow
def test_f2_independent_step_sizes_agree(table):
    finer = build_f2_table(step=5e-4)
    assert np.max(np.abs(finer.values - table.values)) <= 1e-5


# ---------------------------------------------------------------- rescaled Hermite functions


def test_rescaled_hermite_tends_to_airy():
    for x in (-2.0, 0.0, 2.0):
        assert abs(rescaled_hermite(2000, x) - airy(x)) <= 0.05
    for n in (100, 500):
        assert abs(rescaled_hermite(2 * n, 0.0) - airy(0.0)) <= abs(rescaled_hermite(n, 0.0) - airy(0.0)) + 0.01


def test_rescaled_hermite_is_stable_at_large_degree():
    values = rescaled_hermite(10**4, np.linspace(-5, 5, 11))
    assert np.all(np.isfinite(values))
    with pytest.raises(ParameterError):
        rescaled_hermite(10**4 + 1, 0.0)


# ---------------------------------------------------------------- Monte Carlo


def test_edge_statistic_small(table):
    spec = EnsembleSpec(EnsembleKind.GUE, 50, seed=77)
    sample = edge_statistic_mc(spec, 400)
    assert np.array_equal(sample.values, edge_statistic_mc(spec, 400, threads=1).values)
    assert -2.4 <= sample.mean <= -1.2
    assert sample.ks_distance(table) <= 0.15
    assert sample.histogram_rows(bins=10)[0] == ["bin_left", "bin_right", "density"]


def test_edge_statistic_arguments():
    with pytest.raises(ParameterError):
        edge_statistic_mc(EnsembleSpec(EnsembleKind.GUE, 10), 50)
    with pytest.raises(ParameterError):
        edge_statistic_mc(EnsembleSpec(EnsembleKind.WISHART, 10, p=20), 200)


@pytest.mark.slow
def test_edge_statistic_matches_f2(table):
    large = edge_statistic_mc(EnsembleSpec(EnsembleKind.GUE, 200), 5000)
    small = edge_statistic_mc(EnsembleSpec(EnsembleKind.GUE, 50), 5000)
    assert large.ks_distance(table) <= 0.06
    assert large.ks_distance(table) <= small.ks_distance(table) + 0.01
    assert -2.2 <= large.mean <= -1.4


@pytest.mark.slow
def test_edge_universality_for_rademacher_wigner(table):
    spec = EnsembleSpec(EnsembleKind.WIGNER, 200, entry_law=EntryLaw.RADEMACHER, complex_entries=True)
    assert edge_statistic_mc(spec, 2000).ks_distance(table) <= 0.1
