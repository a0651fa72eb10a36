import math
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from centraldiff.differentiator import (
    differentiate_periodic,
    embed_kernel,
    first_derivative_at_center,
    odd_derivative_at_center,
    second_derivative_at_center,
    sin_demo_estimate,
    sin_demo_sum,
    sin_limit_partial_sums,
)
from centraldiff.vandermonde import interpolant_derivative_oracle


def _window(fn, n, h):
    return [fn(j * h) for j in range(-n, n + 1)]


# -- centre formulas ---------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_first_derivative_linear_exact(n):
    assert first_derivative_at_center(_window(lambda x: 3 * x, n, 0.5), 0.5, n) == pytest.approx(3.0, rel=1e-14)
    assert first_derivative_at_center(_window(lambda x: 3 * x, n, F(1, 2)), F(1, 2), n) == 3


@pytest.mark.parametrize("n", [1, 3, 6])
def test_first_derivative_kills_even_functions(n):
    assert first_derivative_at_center(_window(lambda x: x * x, n, 0.7), 0.7, n) == 0.0


def test_first_derivative_sin_coarse_grid():
    # sin sampled at h = pi/2 -> (0, -1, 0, 1, 0)
    got = first_derivative_at_center([0, -1, 0, 1, 0], math.pi / 2, 2)
    assert got == pytest.approx(8 / (3 * math.pi), rel=1e-14)
    assert got == pytest.approx(0.8488, abs=1e-4)


def test_second_derivative_examples():
    assert second_derivative_at_center([4.0] * 7, 0.1, 3) == 0.0
    for h in (0.01, 1.0, 3.0):
        got = second_derivative_at_center(_window(lambda x: x * x, 2, h), h, 2)
        assert got == pytest.approx(2.0, rel=1e-12)
    cos_window = _window(math.cos, 3, math.pi / 2)
    got = second_derivative_at_center(cos_window, math.pi / 2, 3)
    assert got == pytest.approx(-0.981689690401317, rel=1e-12)


def test_second_derivative_exact_path():
    assert second_derivative_at_center([1, 0, 1], 1, 1) == 2
    out = second_derivative_at_center([F(j * j, 9) for j in range(-2, 3)], F(1, 3), 2)
    assert out == F(2, 9) * 9 and isinstance(out, F)


def test_odd_derivative_examples():
    assert odd_derivative_at_center([-2, -1, 0, 1, 2], 1, 2, 1) == 0
    assert odd_derivative_at_center([-8, -1, 0, 1, 8], 1, 2, 1) == 6
    rng = random.Random(3)
    window = [rng.uniform(-1, 1) for _ in range(9)]
    assert odd_derivative_at_center(window, 0.3, 4, 0) == pytest.approx(
        first_derivative_at_center(window, 0.3, 4), rel=1e-13
    )


def test_odd_derivative_fifth_order_of_polynomial():
    # d^5/dx^5 of x^5 - x^3 + 2x is 120 on any grid with n >= 3
    fn = lambda x: x**5 - x**3 + 2 * x  # noqa: E731
    assert odd_derivative_at_center(_window(fn, 3, F(1, 2)), F(1, 2), 3, 2) == 120


def test_centre_formula_errors():
    with pytest.raises(ValueError):
        first_derivative_at_center([1, 2, 3], 1.0, 2)
    with pytest.raises(ValueError):
        second_derivative_at_center([1, 2, 3], 0.0, 1)
    with pytest.raises(ValueError):
        odd_derivative_at_center([1, 2, 3], 1.0, 1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_polynomial_exactness(n):
    h = 1.0 / n
    for j in range(2 * n + 1):
        window = [(k * h) ** j for k in range(-n, n + 1)]
        d1 = first_derivative_at_center(window, h, n)
        d2 = second_derivative_at_center(window, h, n)
        assert d1 == pytest.approx(1.0 if j == 1 else 0.0, rel=1e-10, abs=1e-10)
        assert d2 == pytest.approx(2.0 if j == 2 else 0.0, rel=1e-10, abs=1e-10)
        exact = [F(k, n) ** j for k in range(-n, n + 1)]
        assert first_derivative_at_center(exact, F(1, n), n) == (1 if j == 1 else 0)
        assert second_derivative_at_center(exact, F(1, n), n) == (2 if j == 2 else 0)


@pytest.mark.parametrize("n", [1, 4, 8])
def test_matches_interpolant_oracle_on_random_windows(n):
    rng = random.Random(100 + n)
    for _ in range(25):
        window = [F(rng.randint(-99, 99), rng.randint(1, 12)) for _ in range(2 * n + 1)]
        h = F(rng.randint(1, 9), rng.randint(1, 9))
        assert first_derivative_at_center(window, h, n) == interpolant_derivative_oracle(window, h, 1)
        assert second_derivative_at_center(window, h, n) == interpolant_derivative_oracle(window, h, 2)
        fw, fh = [float(v) for v in window], float(h)
        assert first_derivative_at_center(fw, fh, n) == pytest.approx(
            interpolant_derivative_oracle(fw, fh, 1), rel=1e-10, abs=1e-10
        )


# -- kernels -----------------------------------------------------------------


def test_embed_kernel_examples():
    assert embed_kernel(1, 8, 1).coefficients.tolist() == [0, 0.5, 0, 0, 0, 0, 0, -0.5]
    assert embed_kernel(1, 8, 2).coefficients.tolist() == [-2, 1, 0, 0, 0, 0, 0, 1]
    a = embed_kernel(2, 2000, 1).coefficients
    assert np.flatnonzero(a).tolist() == [1, 2, 1998, 1999]
    assert a[[1, 2, 1998, 1999]].tolist() == [2 / 3, -1 / 12, 1 / 12, -2 / 3]


@pytest.mark.parametrize("N", [64, 2000])
@pytest.mark.parametrize("n", [1, 2, 7, 11, 21])
def test_kernel_invariants(n, N):
    a = embed_kernel(n, N, 1).coefficients
    j = np.arange(1, N)
    assert a[0] == 0
    assert np.array_equal(a[j], -a[N - j])
    assert abs(a.sum()) < 1e-15
    assert not a[n + 1 : N - n].any()
    b = embed_kernel(n, N, 2).coefficients
    assert np.array_equal(b[j], b[N - j])
    assert abs(b.sum()) < 1e-12
    assert not b[n + 1 : N - n].any()


def test_kernel_is_read_only():
    k = embed_kernel(2, 16, 1)
    with pytest.raises(ValueError):
        k.coefficients[0] = 1.0
    assert np.asarray(k).shape == (16,)


@pytest.mark.parametrize("n, N, order", [(3, 6, 1), (1, 2, 2), (2, 8, 3)])
def test_embed_kernel_errors(n, N, order):
    with pytest.raises(ValueError):
        embed_kernel(n, N, order)


# -- periodic differentiation ------------------------------------------------


def _brute_periodic(f, h, n, order):
    a = embed_kernel(n, len(f), order).coefficients
    N = len(f)
    return np.array(
        [sum(a[(m - k) % N] * f[m] for m in range(N)) for k in range(N)]
    ) / h**order


@pytest.mark.parametrize("order", [1, 2])
@pytest.mark.parametrize("n", [1, 3, 7])
def test_periodic_matches_defining_sum(n, order):
    rng = np.random.default_rng(n + 10 * order)
    f = rng.standard_normal(23)
    np.testing.assert_allclose(
        differentiate_periodic(f, 0.3, n, order), _brute_periodic(f, 0.3, n, order), rtol=1e-12, atol=1e-12
    )


@pytest.mark.parametrize("n", [1, 4, 11])
def test_periodic_constant_signal(n):
    assert np.all(differentiate_periodic(np.full(40, 2.5), 0.1, n, 1) == 0)
    assert np.max(np.abs(differentiate_periodic(np.full(40, 2.5), 0.1, n, 2))) < 1e-12


def test_periodic_sine_first_derivative():
    N = 64
    h = 2 * np.pi / N
    x = np.arange(N) * h
    out = differentiate_periodic(np.sin(x), h, 11, 1)
    assert np.max(np.abs(out - np.cos(x))) < 1e-10


def test_periodic_short_signal_rejected():
    with pytest.raises(ValueError):
        differentiate_periodic(np.zeros(6), 1.0, 3)
    with pytest.raises(ValueError):
        differentiate_periodic(np.zeros(16), -1.0, 3)


@settings(max_examples=40, deadline=None)
@given(
    arrays(np.float64, st.integers(12, 48), elements=st.floats(-1e3, 1e3)),
    st.integers(1, 5),
    st.integers(0, 60),
    st.sampled_from([1, 2]),
)
def test_shift_equivariance(f, n, shift, order):
    out = differentiate_periodic(f, 0.5, n, order)
    shifted = differentiate_periodic(np.roll(f, shift), 0.5, n, order)
    np.testing.assert_allclose(shifted, np.roll(out, shift), rtol=1e-12, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(9, 64).flatmap(
        lambda N: st.tuples(
            arrays(np.float64, N, elements=st.floats(-10, 10)),
            arrays(np.float64, N, elements=st.floats(-10, 10)),
        )
    ),
    st.floats(-5, 5),
    st.floats(-5, 5),
    st.sampled_from([1, 2]),
)
def test_linearity(fg, a, b, order):
    f, g = fg
    lhs = differentiate_periodic(a * f + b * g, 1.0, 4, order)
    rhs = a * differentiate_periodic(f, 1.0, 4, order) + b * differentiate_periodic(g, 1.0, 4, order)
    scale = 1 + abs(a) * np.abs(f).max() + abs(b) * np.abs(g).max()
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12 * scale)


# -- sin study ---------------------------------------------------------------


def test_sin_demo_first_values():
    assert sin_demo_sum(1) == 1
    assert sin_demo_sum(2) == F(4, 3)
    assert sin_demo_sum(3) == F(44, 30)
    assert sin_demo_estimate(1) == pytest.approx(2 / math.pi, abs=1e-12)
    assert sin_demo_estimate(2) == pytest.approx(8 / (3 * math.pi), abs=1e-12)
    assert sin_demo_estimate(3) == pytest.approx(88 / (30 * math.pi), abs=1e-12)


def test_sin_demo_matches_window_formula():
    for n in range(1, 12):
        window = _window(lambda x: round(math.sin(x)), n, math.pi / 2)
        assert sin_demo_estimate(n) == pytest.approx(
            first_derivative_at_center(window, math.pi / 2, n), rel=1e-12
        )


def test_sin_demo_converges():
    errors = [abs(sin_demo_estimate(n) - 1) for n in (1, 3, 11, 21, 51)]
    assert errors == sorted(errors, reverse=True)


def test_limit_series_brackets_one():
    s = sin_limit_partial_sums(200)
    assert np.all(s[0::2] > 1) and np.all(s[1::2] < 1)
    assert np.all(np.diff(np.abs(s - 1)) < 0)
