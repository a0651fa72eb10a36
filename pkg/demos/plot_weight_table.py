"""
=======================================
Exact weights for wide central stencils
=======================================

Builds the first-derivative weights for stencils of 3 to 13 points, checks
them against an elimination solve and the determinant formulas, and watches
them approach their n -> infinity limit.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from centraldiff import (
    first_derivative_weights,
    first_minor_determinant,
    limit_first_weight,
    second_derivative_weights,
    solve_weight_system,
    system_determinant,
)

###############################################################################
# The weight table
# ----------------
#
# Row ``n`` holds alpha_1..alpha_n; the first derivative at the centre is
# ``1/(2h) * sum alpha_m (f_m - f_-m)``.

for n in range(1, 7):
    row = first_derivative_weights(n).weights
    print(f"n={n}: " + "  ".join(f"{str(w):>8}" for w in row))

###############################################################################
# Two independent routes to the same numbers
# ------------------------------------------
#
# Gauss-Jordan elimination on the odd-power moment system, and the ratio of
# the Cramer determinants, both reproduce the closed form exactly.

for n in range(1, 13):
    closed = first_derivative_weights(n)
    assert solve_weight_system(n, 0) == closed
    det0 = system_determinant(n)
    assert all(
        Fraction(first_minor_determinant(n, m), det0) == closed[m]
        for m in range(1, n + 1)
    )
print("closed form == elimination == Cramer for n = 1..12")

print("second derivative, n=3:", [str(w) for w in second_derivative_weights(3).weights])

###############################################################################
# Approach to the limiting weights
# --------------------------------
#
# As the stencil widens, alpha_m tends to (-1)**(m+1) * 2/m.

ns = np.arange(1, 41)
fig, ax = plt.subplots(figsize=(6, 4))
for m in (1, 2, 3):
    gap = [
        abs(float(limit_first_weight(m) - first_derivative_weights(n)[m]))
        for n in ns
        if n >= m
    ]
    ax.semilogy(ns[m - 1 :], gap, marker=".", label=f"m = {m}")
ax.set_xlabel("n")
ax.set_ylabel("|limit - alpha_m(n)|")
ax.legend()
fig.tight_layout()
fig.savefig("weight_limit.png", dpi=100)
print("saved weight_limit.png")
