"""
Exact closed-form weights for central differentiation on 2n+1 points.

The first derivative at the centre of a symmetric stencil is

    f'(0) ~ 1/(2h) * sum_{m=1..n} a_m (f_m - f_{-m}),

and the second derivative is

    f''(0) ~ 1/h**2 * sum_{m=1..n} b_m (f_m - 2 f_0 + f_{-m}).

Both weight families are built from the product

    pi_m(n) = prod_{k=1..n, k != m} (1 - m**2 / k**2)

so no interpolating polynomial is ever constructed. Everything here is
exact (``fractions.Fraction``); conversion to floats is left to callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

__all__ = [
    "MAX_HALF_WIDTH",
    "WeightSet",
    "pi_product",
    "first_derivative_weights",
    "second_derivative_weights",
    "top_odd_weights",
    "limit_first_weight",
]

# Guard against accidental huge stencils; raise it if you really need more.
MAX_HALF_WIDTH = 64


def _check_half_width(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"stencil half-width must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"stencil half-width must be >= 1, got {n}")
    if n > MAX_HALF_WIDTH:
        raise ValueError(
            f"stencil half-width {n} exceeds MAX_HALF_WIDTH={MAX_HALF_WIDTH}"
        )
    return int(n)


@dataclass(frozen=True)
class WeightSet:
    """Weights ``alpha_m`` for ``m = 1..n`` of a central difference formula.

    Attributes
    ----------
    n : int
        Stencil half-width; the formula uses 2n+1 samples.
    order : int
        Derivative order the weights produce. Odd orders act on the
        antisymmetric differences ``f_m - f_{-m}``, order 2 on the symmetric
        combination ``f_m - 2 f_0 + f_{-m}``.
    weights : tuple of Fraction
        ``weights[m - 1]`` is ``alpha_m``.
    """

    n: int
    order: int
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if len(self.weights) != self.n:
            raise ValueError(
                f"expected {self.n} weights, got {len(self.weights)}"
            )

    def __len__(self):
        return self.n

    def __getitem__(self, m):
        """Return ``alpha_m`` using the 1-based stencil offset ``m``."""
        if not 1 <= m <= self.n:
            raise IndexError(f"offset m={m} outside 1..{self.n}")
        return self.weights[m - 1]

    def as_array(self, dtype=float):
        return np.array([float(w) for w in self.weights], dtype=dtype)

    def moment(self, power):
        """Exact ``sum_m alpha_m * m**power``."""
        return sum(
            (w * m**power for m, w in enumerate(self.weights, start=1)),
            Fraction(0),
        )


def pi_product(m, n):
    """Exact value of ``prod_{k=1..n, k != m} (1 - m**2/k**2)``.

    Examples
    --------
    >>> pi_product(2, 3)
    Fraction(-5, 3)
    """
    n = _check_half_width(n)
    if not 1 <= m <= n:
        raise ValueError(f"offset m={m} outside 1..{n}")
    # Accumulate numerator and denominator separately, reduce once.
    num, den = 1, 1
    m2 = m * m
    for k in range(1, n + 1):
        if k == m:
            continue
        k2 = k * k
        num *= k2 - m2
        den *= k2
    return Fraction(num, den)


def first_derivative_weights(n):
    """Weights of the (2n+1)-point central first derivative.

    ``alpha_m = 1 / (m * pi_m(n))``.

    >>> [str(w) for w in first_derivative_weights(3).weights]
    ['3/2', '-3/10', '1/30']
    """
    n = _check_half_width(n)
    return WeightSet(n, 1, [1 / (m * pi_product(m, n)) for m in range(1, n + 1)])


def second_derivative_weights(n):
    """Weights of the (2n+1)-point central second derivative.

    ``alpha_m = 1 / (m**2 * pi_m(n))``, to be applied to
    ``f_m - 2 f_0 + f_{-m}`` and divided by ``h**2``.
    """
    n = _check_half_width(n)
    return WeightSet(
        n, 2, [1 / (m * m * pi_product(m, n)) for m in range(1, n + 1)]
    )


def top_odd_weights(n):
    """Weights for the highest odd derivative, order ``2n - 1``.

    ``alpha_m = (-1)**(n+1) * m / ((n!)**2 * pi_m(n))``.
    """
    n = _check_half_width(n)
    sign = 1 if n % 2 == 1 else -1
    scale = Fraction(sign, factorial(n) ** 2)
    return WeightSet(
        n,
        2 * n - 1,
        [scale * m / pi_product(m, n) for m in range(1, n + 1)],
    )


def limit_first_weight(m):
    """Limit of ``alpha_m`` for the first derivative as ``n -> inf``.

    Equals ``(-1)**(m+1) * 2/m``.
    """
    if m < 1:
        raise ValueError(f"offset m must be >= 1, got {m}")
    return Fraction(2 if m % 2 == 1 else -2, m)
