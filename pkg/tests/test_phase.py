import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from doamachine.errors import DomainError
from doamachine.geometry import make_layout, pair_distances
from doamachine.phase import (
    circular_distance,
    cycle_count,
    decompose,
    true_phase,
    wrap,
    wrapped_pattern,
    wrapped_vector,
)
from doamachine.phase.wrap import TWO_PI

phases = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
thetas = st.floats(min_value=-1.5, max_value=1.5)


def test_true_phase_examples():
    assert true_phase(1.2, math.asin(0.5)) == pytest.approx(0.6 * math.pi)
    assert true_phase(6, 0.0) == 0.0
    assert true_phase(4.8, math.asin(-0.5)) == pytest.approx(-2.4 * math.pi)


@pytest.mark.parametrize("theta", [math.pi / 2, -math.pi / 2, 2.0, float("nan")])
def test_true_phase_rejects_theta_outside_domain(theta):
    with pytest.raises(DomainError):
        true_phase(1.0, theta)


def test_true_phase_rejects_non_positive_distance():
    with pytest.raises(DomainError):
        true_phase(0.0, 0.1)


def test_wrap_examples():
    assert wrap(0.6 * math.pi) == pytest.approx(0.6 * math.pi)
    assert wrap(3 * math.pi) == -math.pi
    assert wrap(-math.pi) == -math.pi
    assert wrap(math.pi) == -math.pi


def test_wrap_rejects_non_finite():
    with pytest.raises(ValueError):
        wrap(float("inf"))


def test_wrap_array_shape():
    psi = wrap(np.array([[0.0, 3 * np.pi], [-7.0, 7.0]]))
    assert psi.shape == (2, 2)
    assert np.all(psi >= -np.pi) and np.all(psi < np.pi)


@given(phases)
def test_wrap_range_and_idempotence(phi):
    psi = wrap(phi)
    assert -math.pi <= psi < math.pi
    assert circular_distance(wrap(psi), psi) <= 1e-9


@given(phases, st.integers(min_value=-10 ** 6, max_value=10 ** 6))
def test_wrap_periodicity(phi, k):
    shifted = phi + TWO_PI * k
    # phase that shifted represents exactly, minus k whole turns
    base = float(Fraction(shifted) - k * Fraction(TWO_PI))
    assert circular_distance(wrap(shifted), wrap(base)) <= 1e-9


@pytest.mark.parametrize("k", [1, 10 ** 3, 10 ** 6, -10 ** 6])
def test_wrap_keeps_values_near_pi_at_large_shifts(k):
    phi = math.pi - 1e-7
    shifted = phi + TWO_PI * k
    base = float(Fraction(shifted) - k * Fraction(TWO_PI))
    assert wrap(shifted) > 0.0
    assert circular_distance(wrap(shifted), wrap(base)) <= 1e-9


@pytest.mark.parametrize("half_turns", [1, 3, 5, 99])
def test_wrap_folds_half_integral_cycles(half_turns):
    for phi in (half_turns * math.pi, -half_turns * math.pi):
        psi = wrap(phi)
        assert -math.pi <= psi < 0.0
        assert psi + math.pi <= 1e-9


@given(phases)
def test_decompose_identity(phi):
    parts = decompose(phi)
    assert abs(parts.phi - (parts.psi + 2 * math.pi * parts.q)) <= 1e-9


def test_cycle_count_examples():
    assert cycle_count(6, math.asin(0.5)) == 2
    assert cycle_count(1.2, math.asin(0.5)) == 0


@given(thetas)
def test_cycle_count_zero_below_half_wavelength(theta):
    assert cycle_count(0.5, theta) == 0
    assert cycle_count(1.0, theta) == 0


def test_wrapped_vector_examples(distances_a):
    np.testing.assert_allclose(wrapped_vector(distances_a, 0.0), [0.0, 0.0, 0.0], atol=1e-12)

    plus = wrapped_vector(distances_a, math.asin(5 / 6))
    minus = wrapped_vector(distances_a, math.asin(-5 / 6))
    assert np.all(circular_distance(plus, minus) <= 1e-9)

    half = pair_distances(make_layout([0, Fraction(1, 2)]))
    np.testing.assert_allclose(wrapped_vector(half, math.asin(0.8)), [0.4 * math.pi])


def test_wrapped_pattern_matches_wrapped_vector(distances_b):
    sines = np.array([-0.9, -0.25, 0.0, 0.3, 0.77])
    pattern = wrapped_pattern(distances_b.as_array(), sines)
    assert pattern.shape == (5, 3)
    for row, sine in zip(pattern, sines):
        assert np.all(circular_distance(row, wrapped_vector(distances_b, math.asin(sine))) <= 1e-12)
