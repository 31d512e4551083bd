"""
Test ensemble samplers: symmetry, reproducibility and entry variances
"""
import numpy as np
import pytest

from rmt_lab.core.errors import ParameterError
from rmt_lab.core.monte_carlo import mean_and_stderr, run_trials, z_score
from rmt_lab.ensembles.dyson_walk import sample_dyson_walk, sample_independent_walks
from rmt_lab.ensembles.ensemble_base import (
    DiagonalMode,
    EnsembleKind,
    EnsembleSpec,
    EntryLaw,
    Normalization,
)
from rmt_lab.ensembles.samplers import draw_matrix, sample
from rmt_lab.utils.rng import trial_rng


def test_goe_small_is_real_symmetric():
    a = sample(EnsembleSpec(EnsembleKind.GOE, 2, seed=7), 0).entries
    assert np.isrealobj(a)
    assert a[0, 1] == a[1, 0]


@pytest.mark.parametrize(
    "spec",
    [
        EnsembleSpec(EnsembleKind.GUE, 64),
        EnsembleSpec(EnsembleKind.GOE, 33),
        EnsembleSpec(EnsembleKind.WIGNER, 40, entry_law=EntryLaw.RADEMACHER),
        EnsembleSpec(EnsembleKind.WIGNER, 17, entry_law=EntryLaw.UNIFORM_SYMMETRIC, complex_entries=True),
        EnsembleSpec(EnsembleKind.GUE, 1),
    ],
)
def test_hermitian_kinds_are_exactly_self_adjoint(spec):
    for trial in range(3):
        a = sample(spec, trial).entries
        assert np.max(np.abs(a - a.conj().T)) == 0.0
        assert np.all(np.imag(np.diag(a)) == 0.0)


def test_sample_is_pure_function_of_spec_and_trial():
    spec = EnsembleSpec(EnsembleKind.GUE, 20, seed=123)
    first = run_trials(lambda t: sample(spec, t).entries, 8, threads=4)
    second = [sample(spec, t).entries for t in range(8)]
    for a, b in zip(first, second):
        assert np.array_equal(a, b)
    assert not np.array_equal(first[0], first[1])
    other_seed = sample(EnsembleSpec(EnsembleKind.GUE, 20, seed=124), 0).entries
    assert not np.array_equal(first[0], other_seed)


def test_diagonal_modes():
    zero = sample(EnsembleSpec(EnsembleKind.GOE, 10, diagonal=DiagonalMode.ZERO), 0).entries
    assert np.all(np.diag(zero) == 0.0)
    # Same stream, only the diagonal factor differs
    std = sample(EnsembleSpec(EnsembleKind.GOE, 10, diagonal=DiagonalMode.STANDARD), 0).entries
    unit = sample(EnsembleSpec(EnsembleKind.GOE, 10, diagonal=DiagonalMode.UNIT), 0).entries
    np.testing.assert_allclose(np.diag(std), np.sqrt(2.0) * np.diag(unit))
    np.testing.assert_array_equal(std - np.diag(np.diag(std)), unit - np.diag(np.diag(unit)))


def test_goe_entry_variances_small():
    spec = EnsembleSpec(EnsembleKind.GOE, 10, seed=11)
    samples = [sample(spec, t).entries for t in range(4000)]
    off = [a[0, 1] ** 2 for a in samples]
    diag = [a[0, 0] ** 2 for a in samples]
    assert abs(z_score(off, 1 / 10)) <= 5
    assert abs(z_score(diag, 2 / 10)) <= 5


@pytest.mark.slow
def test_goe_entry_variances_remark():
    spec = EnsembleSpec(EnsembleKind.GOE, 100)
    pairs = run_trials(lambda t: tuple(sample(spec, t).entries[[0, 0], [1, 0]] ** 2), 10_000)
    off, diag = zip(*pairs)
    assert abs(z_score(off, 0.01)) <= 5
    assert abs(z_score(diag, 0.02)) <= 5


@pytest.mark.slow
def test_gue_second_moment_is_one():
    spec = EnsembleSpec(EnsembleKind.GUE, 50)
    traces = run_trials(lambda t: sample(spec, t).trace_power(2), 10_000)
    assert abs(z_score(traces, 1.0)) <= 5


def test_unnormalized_ginibre_entries_have_unit_modulus_variance():
    spec = EnsembleSpec(EnsembleKind.GINIBRE, 60, normalization=Normalization.UNNORMALIZED, seed=3)
    a = sample(spec, 0).entries
    assert np.iscomplexobj(a)
    mean, stderr = mean_and_stderr(np.abs(a.ravel()) ** 2)
    assert abs(mean - 1.0) <= 5 * stderr


def test_ginibre_real_entry_laws():
    a = sample(EnsembleSpec(EnsembleKind.GINIBRE, 30, entry_law=EntryLaw.RADEMACHER), 0).entries
    assert np.isrealobj(a)
    np.testing.assert_allclose(np.abs(a), 1 / np.sqrt(30))


def test_wishart_shape_and_operator():
    spec = EnsembleSpec(EnsembleKind.WISHART, 20, p=40)
    s = sample(spec, 0)
    assert s.entries.shape == (20, 40)
    w = s.operator()
    assert w.shape == (20, 20)
    assert np.max(np.abs(w - w.conj().T)) == 0.0
    assert spec.ratio == 0.5


def test_cauchy_entries_flagged_without_variance():
    spec = EnsembleSpec(EnsembleKind.WIGNER, 5, entry_law=EntryLaw.CAUCHY_STD)
    assert not spec.has_variance
    assert EnsembleSpec(EnsembleKind.WIGNER, 5).has_variance


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind=EnsembleKind.GUE, n=0),
        dict(kind=EnsembleKind.WISHART, n=3),
        dict(kind=EnsembleKind.GOE, n=3, p=4),
        dict(kind=EnsembleKind.GUE, n=3, entry_law=EntryLaw.RADEMACHER),
        dict(kind=EnsembleKind.GUE, n=3, seed=-1),
    ],
)
def test_invalid_specs_raise_parameter_error(kwargs):
    with pytest.raises(ParameterError):
        EnsembleSpec(**kwargs)


def test_string_fields_are_coerced():
    spec = EnsembleSpec("wishart", 4, p=8, entry_law="uniform", normalization="unnormalized")
    assert spec.kind is EnsembleKind.WISHART
    assert spec.scale == 1.0


def test_single_step_walk_is_scaled_sample():
    spec = EnsembleSpec(EnsembleKind.GUE, 6, seed=5)
    walk = sample_dyson_walk(spec, 1, 0.25, trial=2)
    expected = 0.25 * draw_matrix(spec, trial_rng(spec.seed, 2, 0))
    assert len(walk) == 1
    np.testing.assert_array_equal(walk[0].entries, expected)


def test_walk_with_suggested_parameters():
    walk = sample_dyson_walk(EnsembleSpec(EnsembleKind.GUE, 15), 1500, 0.01, trial=0)
    assert len(walk) == 1500
    for s in walk[::100]:
        assert s.entries.shape == (15, 15)
        assert np.max(np.abs(s.entries - s.entries.conj().T)) == 0.0
    # Increments are independent draws
    d1 = walk[1].entries - walk[0].entries
    d2 = walk[2].entries - walk[1].entries
    assert not np.allclose(d1, d2)


def test_walk_rejects_bad_parameters():
    spec = EnsembleSpec(EnsembleKind.GUE, 3)
    with pytest.raises(ParameterError):
        sample_dyson_walk(spec, 0, 0.1, 0)
    with pytest.raises(ParameterError):
        sample_dyson_walk(spec, 5, 0.0, 0)
    with pytest.raises(ParameterError):
        sample_dyson_walk(EnsembleSpec(EnsembleKind.GINIBRE, 3), 5, 0.1, 0)


def test_independent_walks_shape_and_reproducibility():
    a = sample_independent_walks(4, 100, 0.01, seed=1, trial=0)
    b = sample_independent_walks(4, 100, 0.01, seed=1, trial=0)
    assert a.shape == (100, 4)
    np.testing.assert_array_equal(a, b)
