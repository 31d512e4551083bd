"""
Test Karlin-McGregor, Gessel-Viennot, Hankel determinants and Dyson walk crossings
"""
import math
from fractions import Fraction

import pytest

from rmt_lab.core.errors import BudgetExceededError, InputError, ParameterError
from rmt_lab.ensembles.dyson_walk import sample_dyson_walk
from rmt_lab.ensembles.ensemble_base import EnsembleKind, EnsembleSpec
from rmt_lab.paths.dag import (
    WeightedDag,
    catalan_lattice_dag,
    gv_determinant,
    gv_path_weights,
    gv_vertex_disjoint_sum,
    random_dag,
)
from rmt_lab.paths.determinants import catalan_hankel_det, exact_det
from rmt_lab.paths.dyson import dyson_crossing_check, mean_min_spacing, trajectory_rows
from rmt_lab.paths.walks import (
    WalkSpec,
    km_brute_force,
    km_determinant,
    km_enumerate,
    noncrossing_probability,
    single_walk_distribution,
    transition_matrix,
)
from rmt_lab.utils.rng import trial_rng

HALF = Fraction(1, 2)


# ---------------------------------------------------------------- Karlin-McGregor


def test_two_walkers_two_steps():
    spec = WalkSpec((2, 0), (2, 0), 2)
    assert transition_matrix(spec) == [[HALF, Fraction(1, 4)], [Fraction(1, 4), HALF]]
    assert km_determinant(spec) == Fraction(3, 16)
    assert km_enumerate(spec) == Fraction(3, 16)
    assert noncrossing_probability(spec) == Fraction(3, 16)
    assert km_brute_force(spec) == Fraction(3, 16)


def test_single_walker_is_plain_transition_probability():
    spec = WalkSpec((0,), (2,), 4)
    assert km_determinant(spec) == single_walk_distribution(spec, 0)[2] == Fraction(4, 16)
    assert km_enumerate(spec) == km_determinant(spec)


def test_swapped_targets_force_a_crossing():
    spec = WalkSpec((2, 0), (0, 2), 2)
    assert noncrossing_probability(spec) == 0
    assert km_determinant(spec) == -Fraction(3, 16)
    assert km_enumerate(spec) == km_determinant(spec)


def test_parity_unreachable_targets():
    spec = WalkSpec((2, 0), (3, 1), 2)
    assert km_determinant(spec) == 0
    assert km_enumerate(spec) == 0


@pytest.mark.parametrize(
    "starts, ends, horizon, up",
    [
        ((4, 2, 0), (4, 2, 0), 4, HALF),
        ((4, 2, 0), (6, 2, -2), 6, HALF),
        ((3, 0), (3, 0), 2, HALF),
        ((5, 1), (3, 1), 4, {1: Fraction(1, 4), 2: Fraction(3, 4), 3: Fraction(1, 8)}),
        ((2, 0, -2), (4, 0, -4), 8, Fraction(3, 8)),
    ],
)
def test_determinant_equals_disjoint_enumeration(starts, ends, horizon, up):
    spec = WalkSpec(starts, ends, horizon, up)
    det = km_determinant(spec)
    assert det == km_enumerate(spec)
    if spec.n * horizon <= 16:
        assert det == km_brute_force(spec)


def test_larger_horizon_by_dynamic_programming():
    spec = WalkSpec((4, 0, -4), (6, 0, -6), 20)
    assert km_determinant(spec) == km_enumerate(spec) == noncrossing_probability(spec)
    assert km_determinant(spec) > 0


def test_walk_budgets_and_validation():
    with pytest.raises(BudgetExceededError):
        WalkSpec((0,), (0,), 32)
    with pytest.raises(BudgetExceededError):
        km_enumerate(WalkSpec(tuple(range(10, -2, -2)), tuple(range(10, -2, -2)), 2))
    with pytest.raises(ParameterError):
        WalkSpec((0, 2), (0, 2), 2)
    with pytest.raises(ParameterError):
        WalkSpec((2, 0), (0, 0), 2)
    with pytest.raises(ParameterError):
        WalkSpec((0,), (0,), 2, Fraction(3, 2))


# ---------------------------------------------------------------- Gessel-Viennot


def test_catalan_lattice_path_weights():
    dag, sources, sinks = catalan_lattice_dag(2)
    weights = gv_path_weights(dag, sources, sinks)
    assert weights == [[1, 1, 2], [1, 2, 5], [2, 5, 14]]
    assert weights[0][2] == 2 and weights[2][2] == 14


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_catalan_lattice_determinant_is_one_both_ways(n):
    dag, sources, sinks = catalan_lattice_dag(n)
    assert gv_determinant(dag, sources, sinks) == 1
    assert gv_vertex_disjoint_sum(dag, sources, sinks) == 1


def test_shared_vertex_is_excluded():
    edges = {("a1", "c"): 1, ("c", "b1"): 1, ("a2", "c"): 1, ("c", "b2"): 1, ("a2", "d"): 1, ("d", "b2"): 1}
    dag = WeightedDag(edges)
    sources, sinks = ["a1", "a2"], ["b1", "b2"]
    weights = gv_path_weights(dag, sources, sinks)
    assert weights == [[1, 1], [1, 2]]
    # without disjointness the identity assignment would weigh 1 * 2
    assert gv_vertex_disjoint_sum(dag, sources, sinks) == 1 == gv_determinant(dag, sources, sinks)


def test_cycle_is_rejected():
    with pytest.raises(InputError):
        WeightedDag({(1, 2): 1, (2, 3): 1, (3, 1): 1})


def test_random_dags():
    for trial in range(20):
        rng = trial_rng(2024, trial)
        dag = random_dag(rng, 9, density=0.45)
        for sources, sinks in (((0, 1), (7, 8)), ((0, 1, 2), (6, 7, 8))):
            assert gv_determinant(dag, sources, sinks) == gv_vertex_disjoint_sum(dag, sources, sinks)


def test_fractional_weights():
    dag = WeightedDag({(0, 1): Fraction(1, 3), (0, 2): Fraction(2, 5), (1, 3): 2, (2, 3): Fraction(1, 7), (1, 4): 1})
    assert gv_determinant(dag, [0, 1], [3, 4]) == gv_vertex_disjoint_sum(dag, [0, 1], [3, 4])


def test_disjoint_sum_budget():
    dag, sources, sinks = catalan_lattice_dag(4)
    with pytest.raises(BudgetExceededError):
        gv_vertex_disjoint_sum(dag, sources, sinks)


# ---------------------------------------------------------------- Hankel


def test_hankel_determinants():
    assert catalan_hankel_det(0) == 1
    assert catalan_hankel_det(1) == 1
    assert all(catalan_hankel_det(n) == 1 for n in range(13))
    with pytest.raises(BudgetExceededError):
        catalan_hankel_det(13)


def test_exact_det():
    assert exact_det([]) == 1
    assert exact_det([[Fraction(1, 2), Fraction(1, 4)], [Fraction(1, 4), Fraction(1, 2)]]) == Fraction(3, 16)
    with pytest.raises(ParameterError):
        exact_det([[1, 2]])


# ---------------------------------------------------------------- Dyson walks


def test_two_by_two_walks_never_collide():
    spec = EnsembleSpec(EnsembleKind.GUE, 2, seed=3)
    for trial in range(100):
        report = dyson_crossing_check(sample_dyson_walk(spec, 50, 0.1, trial))
        assert report.collisions == 0
        assert report.min_spacing > 0


def test_single_eigenvalue_walk():
    report = dyson_crossing_check(sample_dyson_walk(EnsembleSpec(EnsembleKind.GUE, 1), 5, 0.1, 0))
    assert report.collisions == 0 and math.isinf(report.min_spacing)


def test_trajectory_rows():
    rows = trajectory_rows(sample_dyson_walk(EnsembleSpec(EnsembleKind.GOE, 3), 4, 0.5, 0))
    assert rows[0] == ["step", "lambda_1", "lambda_2", "lambda_3"]
    assert [r[0] for r in rows[1:]] == [1, 2, 3, 4]
    assert all(r[1] <= r[2] <= r[3] for r in rows[1:])


def test_unitary_walk_repels_more_than_orthogonal():
    gue = mean_min_spacing(EnsembleSpec(EnsembleKind.GUE, 13, seed=8), 20, 0.1, 50)
    goe = mean_min_spacing(EnsembleSpec(EnsembleKind.GOE, 13, seed=8), 20, 0.1, 50)
    assert gue >= goe
