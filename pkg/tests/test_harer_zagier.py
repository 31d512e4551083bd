"""
Test the Harer-Zagier recursion, its generating function and the tail bounds
"""
import math
from fractions import Fraction

import pytest
import sympy

from rmt_lab.combinatorics.catalan import catalan
from rmt_lab.combinatorics.moments import gue_moment_exact
from rmt_lab.core.errors import DomainError, ParameterError
from rmt_lab.harer_zagier.bounds import (
    lambda_max_tail,
    lambda_max_tail_optimized,
    lambda_max_trend,
    moment_upper_bound,
    tail_frequencies,
)
from rmt_lab.harer_zagier.recursion import (
    X,
    HZState,
    hz_bk,
    hz_generating_check,
    hz_moment_polynomial,
    hz_sequence,
)


def _poly(expr):
    return sympy.Poly(expr, X, domain=sympy.QQ)


def test_first_values():
    assert hz_bk(1) == _poly(1)
    assert hz_bk(2) == _poly(1 + X / 2)
    assert hz_bk(3) == _poly(1 + 2 * X)
    assert hz_bk(4) == _poly(1 + 5 * X + sympy.Rational(3, 2) * X**2)
    assert hz_bk(3, 2) == Fraction(3, 2)


def test_recursion_step_reproduces_b4():
    n = 7
    assert hz_bk(3, n) + Fraction(3 * 4, 4 * n * n) * hz_bk(2, n) == hz_bk(4, n)


@pytest.mark.parametrize("k", range(0, 9))
def test_catalan_times_bk_equals_genus_enumeration(k):
    assert hz_moment_polynomial(k) == gue_moment_exact(2 * k)


def test_numeric_and_symbolic_agree():
    for k in range(1, 11):
        poly = hz_bk(k)
        for n in range(1, 11):
            value = poly.eval(sympy.Rational(1, n * n))
            assert Fraction(int(value.p), int(value.q)) == hz_bk(k, n)


def test_state_is_monotone_and_matches_sequence():
    for n in range(1, 11):
        state = HZState(n).extend(30)
        assert state.is_monotone()
        assert state.values[:11] == hz_sequence(10, n)
        assert state.values[1] == 1


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        hz_bk(-1)
    with pytest.raises(ParameterError):
        hz_bk(3, 0)
    with pytest.raises(ParameterError):
        HZState(0)


# ---------------------------------------------------------------- generating function


def test_generating_function_examples():
    assert hz_generating_check(1, [0.05], 40) <= 1e-10
    assert hz_generating_check(3, [0.02], 40) <= 1e-10
    assert hz_generating_check(2, [0.0], 40) == 0.0
    assert hz_generating_check(4, [0.001, 0.005, 0.01, 0.02], 40) <= 1e-8


def test_divergent_truncation_suggests_smaller_s():
    with pytest.raises(ParameterError, match="use s <"):
        hz_generating_check(10, [0.9], 5)
    with pytest.raises(DomainError):
        hz_generating_check(1, [1.0], 40)


# ---------------------------------------------------------------- bounds


def test_exact_moments_respect_bound():
    for n in (5, 10, 50):
        for k in range(1, 11):
            assert catalan(k) * hz_bk(k, n) <= catalan(k) * math.exp(k**3 / (2 * n * n))
            assert float(catalan(k) * hz_bk(k, n)) <= moment_upper_bound(k, n)


def test_limit_tail_bound():
    assert lambda_max_tail_optimized(1.0) == pytest.approx(math.exp(-0.5))
    assert lambda_max_tail_optimized(4.0) < lambda_max_tail_optimized(1.0)


def test_finite_bound_tends_to_limit():
    assert lambda_max_tail_optimized(1.0, 10**6) == pytest.approx(math.exp(-0.5), rel=1e-3)


def test_tail_bound_rejects_nonpositive():
    with pytest.raises(ParameterError):
        lambda_max_tail(0.0, 3, 10)
    with pytest.raises(ParameterError):
        lambda_max_tail_optimized(-1.0)


def test_tail_frequencies_small():
    rows = tail_frequencies(30, [1.0, 2.0, 4.0], 400, seed=5)
    assert [r.t for r in rows] == [1.0, 2.0, 4.0]
    assert all(r.within_bound for r in rows)
    assert rows[0].frequency >= rows[-1].frequency


@pytest.mark.slow
def test_tail_frequencies_respect_bound():
    for row in tail_frequencies(100, [1.0, 2.0, 4.0], 2000, seed=20240601):
        assert row.frequency <= row.bound + 3 * row.stderr


@pytest.mark.slow
def test_largest_eigenvalue_approaches_edge():
    trend = lambda_max_trend([100, 200, 400], 200, seed=9)
    gaps = [abs(trend[n]["mean"] - 2.0) for n in (100, 200, 400)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert trend[400]["exceed"] <= trend[100]["exceed"] + 0.01
    assert trend[400]["exceed"] <= 0.01
