"""
Independent routes to the central difference weights.

Nothing in this module uses the closed-form products of
:mod:`centraldiff.weights`. The odd-power moment system

    sum_{m=1..n} alpha_m * m**(2k+1) = delta_{lk},   k = 0..n-1

is solved by exact elimination, and its determinants are evaluated both
directly (fraction-free Bareiss elimination) and by their product formulas.
:func:`interpolant_derivative_oracle` goes further and fits the full
degree-2n interpolant through all 2n+1 samples.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational

import mpmath

from .weights import WeightSet, _check_half_width

__all__ = [
    "moment_matrix",
    "bareiss_determinant",
    "system_determinant",
    "first_minor_determinant",
    "direct_system_determinant",
    "direct_minor_determinant",
    "solve_weight_system",
    "interpolant_derivative_oracle",
]

# Working precision of the floating oracle, in significant decimal digits.
ORACLE_DPS = 40


def moment_matrix(n):
    """Integer matrix ``M[k][m-1] = m**(2k+1)`` for ``k = 0..n-1``."""
    n = _check_half_width(n)
    return [[m ** (2 * k + 1) for m in range(1, n + 1)] for k in range(n)]


def bareiss_determinant(matrix):
    """Determinant of a square integer matrix by fraction-free elimination.

    All intermediate values stay integers; each division is exact.
    """
    a = [list(map(int, row)) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def _pair_product(values):
    prod = 1
    for j in range(len(values)):
        for i in range(j):
            prod *= values[j] ** 2 - values[i] ** 2
    return prod


def system_determinant(n):
    """``n! * prod_{1<=i<j<=n} (j**2 - i**2)``, the odd-power Vandermonde determinant."""
    n = _check_half_width(n)
    return factorial(n) * _pair_product(list(range(1, n + 1)))


def first_minor_determinant(n, m):
    """Product formula for the Cramer numerator of the first-derivative weight.

    ``(-1)**(m+1) * (n!/m)**3 * prod_{i<j; i,j != m} (j**2 - i**2)``.
    """
    n = _check_half_width(n)
    if not 1 <= m <= n:
        raise ValueError(f"offset m={m} outside 1..{n}")
    sign = 1 if m % 2 == 1 else -1
    # n!/m is an integer because m <= n.
    rest = [i for i in range(1, n + 1) if i != m]
    return sign * (factorial(n) // m) ** 3 * _pair_product(rest)


def direct_system_determinant(n):
    return bareiss_determinant(moment_matrix(n))


def direct_minor_determinant(n, m, l=0):
    """Determinant of the moment matrix with column ``m`` replaced by unit vector ``e_l``."""
    n = _check_half_width(n)
    if not 1 <= m <= n:
        raise ValueError(f"offset m={m} outside 1..{n}")
    if not 0 <= l < n:
        raise ValueError(f"moment index l={l} outside 0..{n - 1}")
    a = moment_matrix(n)
    for k in range(n):
        a[k][m - 1] = 1 if k == l else 0
    return bareiss_determinant(a)


def _solve_exact(a, b):
    """Solve ``a x = b`` over the rationals by Gauss-Jordan elimination."""
    size = len(a)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def solve_weight_system(n, l):
    """Exact weights for the derivative of odd order ``2l+1`` on 2n+1 points.

    The result ``alpha_m`` satisfies ``sum_m alpha_m m**(2k+1) = delta_{lk}``
    for ``k = 0..n-1``; the derivative is then
    ``(2l+1)!/(2 h**(2l+1)) * sum_m alpha_m (f_m - f_{-m})``.
    """
    n = _check_half_width(n)
    if not 0 <= l < n:
        raise ValueError(f"moment index l={l} outside 0..{n - 1}")
    rhs = [1 if k == l else 0 for k in range(n)]
    return WeightSet(n, 2 * l + 1, _solve_exact(moment_matrix(n), rhs))


def _is_exact(values):
    return all(isinstance(v, Rational) for v in values)


def interpolant_derivative_oracle(window, h, d):
    """Derivative of order ``d`` at the centre of the full degree-2n interpolant.

    Fits ``P(x) = sum_k c_k x**k`` through all samples ``(j*h, window[j+n])``,
    ``j = -n..n``, without exploiting symmetry, and returns ``d! * c_d``.

    Parameters
    ----------
    window : sequence
        The 2n+1 samples, centre in the middle.
    h : number
        Grid spacing.
    d : int
        Derivative order, ``0 <= d <= 2n``.

    Returns
    -------
    Fraction or float
        Exact when every sample and ``h`` are rational (int or Fraction);
        otherwise solved at ``ORACLE_DPS`` digits and rounded to float.
    """
    values = list(window)
    size = len(values)
    if size % 2 != 1:
        raise ValueError(f"window length must be odd, got {size}")
    n = size // 2
    if not 0 <= d <= 2 * n:
        raise ValueError(f"derivative order {d} outside 0..{2 * n}")
    if not h > 0:
        raise ValueError(f"grid spacing must be positive, got {h}")

    if _is_exact(values + [h]):
        h = Fraction(h)
        xs = [j * h for j in range(-n, n + 1)]
        a = [[x**k for k in range(size)] for x in xs]
        coeffs = _solve_exact(a, values)
        return factorial(d) * coeffs[d]

    with mpmath.workdps(ORACLE_DPS):
        hm = mpmath.mpf(h)
        a = mpmath.matrix(size, size)
        for i, j in enumerate(range(-n, n + 1)):
            x = j * hm
            for k in range(size):
                a[i, k] = x**k
        b = mpmath.matrix([mpmath.mpf(v) for v in values])
        coeffs = mpmath.lu_solve(a, b)
        return float(factorial(d) * coeffs[d])
