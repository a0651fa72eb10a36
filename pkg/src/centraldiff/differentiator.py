"""
Apply central difference weights to sampled data.

Two settings are covered:

* a single window of 2n+1 samples, differentiated at its centre
  (``*_at_center``). Exact inputs (ints and Fractions) give exact output.
* a length-N periodic signal differentiated at every sample by correlating
  it with an embedded kernel (:func:`embed_kernel`,
  :func:`differentiate_periodic`).

Kernel layout
-------------
For the first derivative the kernel holds ``a[m] = +alpha_m / 2`` and
``a[N-m] = -alpha_m / 2`` for ``m = 1..n``, so that

    f'(k h) ~ 1/h * sum_m a[(m - k) mod N] f_m.

The 1/2 of the centre formula lives in the kernel, the 1/h does not. For
the second derivative ``a[m] = a[N-m] = alpha_m`` and ``a[0] = -2 sum alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational

import numpy as np

from .vandermonde import solve_weight_system
from .weights import (
    _check_half_width,
    first_derivative_weights,
    second_derivative_weights,
)

__all__ = [
    "DifferentiatorKernel",
    "first_derivative_at_center",
    "second_derivative_at_center",
    "odd_derivative_at_center",
    "embed_kernel",
    "differentiate_periodic",
    "sin_demo_sum",
    "sin_demo_estimate",
    "sin_limit_partial_sums",
]


def _window_halves(window, n):
    values = list(window)
    if len(values) != 2 * n + 1:
        raise ValueError(
            f"window of length {len(values)} does not match 2n+1={2 * n + 1}"
        )
    return values


def _check_spacing(h):
    if not h > 0:
        raise ValueError(f"grid spacing must be positive, got {h}")


def _exact(values, h):
    return isinstance(h, Rational) and all(isinstance(v, Rational) for v in values)


def _antisymmetric_sum(values, weights, n, exact):
    # sum_m alpha_m (f_m - f_{-m}); values[n] is the centre sample.
    if exact:
        return sum(
            (w * (values[n + m] - values[n - m]) for m, w in enumerate(weights, 1)),
            Fraction(0),
        )
    total = 0.0
    for m, w in enumerate(weights, 1):
        total += float(w) * (float(values[n + m]) - float(values[n - m]))
    return total


def first_derivative_at_center(window, h, n):
    """First derivative at the centre of a (2n+1)-sample window.

    ``1/(2h) * sum_{m=1..n} alpha_m (f_m - f_{-m})``.

    Parameters
    ----------
    window : sequence
        Samples ``f_{-n}, ..., f_0, ..., f_n``.
    h : number
        Grid spacing, positive.
    n : int
        Stencil half-width.

    Returns
    -------
    Fraction if all inputs are rational, float otherwise.
    """
    n = _check_half_width(n)
    _check_spacing(h)
    values = _window_halves(window, n)
    exact = _exact(values, h)
    s = _antisymmetric_sum(values, first_derivative_weights(n).weights, n, exact)
    if exact:
        return s / (2 * Fraction(h))
    return s / (2.0 * float(h))


def second_derivative_at_center(window, h, n):
    """Second derivative at the centre: ``1/h**2 * sum alpha_m (f_m - 2 f_0 + f_{-m})``."""
    n = _check_half_width(n)
    _check_spacing(h)
    values = _window_halves(window, n)
    weights = second_derivative_weights(n).weights
    if _exact(values, h):
        f0 = values[n]
        s = sum(
            (w * (values[n + m] - 2 * f0 + values[n - m]) for m, w in enumerate(weights, 1)),
            Fraction(0),
        )
        return s / Fraction(h) ** 2
    f0 = float(values[n])
    s = 0.0
    for m, w in enumerate(weights, 1):
        s += float(w) * (float(values[n + m]) - 2.0 * f0 + float(values[n - m]))
    return s / float(h) ** 2


def odd_derivative_at_center(window, h, n, l):
    """Derivative of odd order ``2l+1`` at the window centre.

    Uses the exact moment-system weights and the relation
    ``P^(2l+1)(0) = (2l+1)! * c_{2l+1}``.
    """
    n = _check_half_width(n)
    if not 0 <= l < n:
        raise ValueError(f"l={l} outside 0..{n - 1}")
    _check_spacing(h)
    values = _window_halves(window, n)
    exact = _exact(values, h)
    weights = solve_weight_system(n, l).weights
    s = _antisymmetric_sum(values, weights, n, exact)
    p = 2 * l + 1
    if exact:
        return factorial(p) * s / (2 * Fraction(h) ** p)
    return factorial(p) * s / (2.0 * float(h) ** p)


@dataclass(frozen=True)
class DifferentiatorKernel:
    """Weights of order ``order`` and half-width ``n`` laid out on a period of ``N``."""

    n: int
    N: int
    order: int
    coefficients: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coefficients, dtype=dtype)


def embed_kernel(n, N, order=1):
    """Periodic kernel of length ``N`` for first (``order=1``) or second derivatives.

    ``N`` must be at least ``2n+1``; at ``N = 2n`` the two arms of the
    stencil would land on the same index.

    >>> embed_kernel(1, 8, 1).coefficients
    array([ 0. ,  0.5,  0. ,  0. ,  0. ,  0. ,  0. , -0.5])
    """
    n = _check_half_width(n)
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    if N < 2 * n + 1:
        raise ValueError(f"period N={N} too short for a {2 * n + 1}-point stencil")
    a = np.zeros(N)
    m = np.arange(1, n + 1)
    if order == 1:
        w = first_derivative_weights(n).as_array() / 2.0
        a[m] = w
        a[N - m] = -w
    else:
        ws = second_derivative_weights(n)
        a[m] = ws.as_array()
        a[N - m] = a[m]
        a[0] = -2.0 * float(sum(ws.weights))
    a.setflags(write=False)
    return DifferentiatorKernel(n, N, order, a)


def differentiate_periodic(f, h, n, order=1):
    """Differentiate an N-periodic sampled signal at every sample.

    Computes ``1/h**order * sum_m a[(m - k) mod N] f_m`` for each ``k`` by
    direct correlation with the (2n+1)-tap kernel.

    Parameters
    ----------
    f : array_like, shape (N,)
        One period of samples, ``f[k] = f(k h)``.
    h : float
        Grid spacing.
    n : int
        Stencil half-width.
    order : {1, 2}

    Returns
    -------
    ndarray, shape (N,)
    """
    f = np.asarray(f, dtype=float)
    if f.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    _check_spacing(h)
    N = f.size
    kernel = embed_kernel(n, N, order).coefficients
    out = kernel[0] * f
    # Only 2n taps are nonzero besides the centre; roll instead of an N x N sum.
    # sum_j a[j] f[(k + j) mod N]
    for j in range(1, n + 1):
        out = out + kernel[j] * np.roll(f, -j) + kernel[N - j] * np.roll(f, j)
    return out / float(h) ** order


def sin_demo_sum(n):
    """Exact weight sum behind :func:`sin_demo_estimate`.

    ``sum_{odd j <= n} (-1)**((j-1)/2) * alpha_j``.
    """
    weights = first_derivative_weights(n).weights
    return sum(
        (w if (j - 1) % 4 == 0 else -w for j, w in enumerate(weights, 1) if j % 2),
        Fraction(0),
    )


def sin_demo_estimate(n):
    """Estimate of ``d/dx sin x`` at 0 from a 2n+1 stencil with ``h = pi/2``.

    The samples are 0, +-1, 0, -+1, ..., so only odd offsets contribute and
    the estimate reduces to ``2/pi * sin_demo_sum(n)``.
    """
    return 2.0 / np.pi * float(sin_demo_sum(n))


def sin_limit_partial_sums(terms):
    """Partial sums of the n -> inf sin estimate, ``4/pi * sum_{m<=M} (-1)**m / (2m+1)``.

    Entry ``M`` of the returned array holds the sum through term ``M``; the
    series tends to 1.
    """
    m = np.arange(terms)
    return 4.0 / np.pi * np.cumsum((-1.0) ** m / (2 * m + 1))
