"""
=============================================
Differentiating sin on a very coarse grid
=============================================

With h = pi/2 the samples of sin are just 0, 1, 0, -1, ... and a 3-point
stencil gives d/dx sin(0) ~ 0.64. Widening the stencil drives the estimate
to the exact value 1.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from centraldiff import first_derivative_at_center
from centraldiff.differentiator import (
    sin_demo_estimate,
    sin_demo_sum,
    sin_limit_partial_sums,
)

###############################################################################
# Stencil by stencil
# ------------------

h = math.pi / 2
for n in (1, 2, 3, 5, 11, 21, 51):
    window = [math.sin(j * h) for j in range(-n, n + 1)]
    exact = str(sin_demo_sum(n)) if n <= 5 else "..."
    print(
        f"n={n:2d}  2/pi * {exact:>8} = {sin_demo_estimate(n):.12f}"
        f"   (window formula: {first_derivative_at_center(window, h, n):.12f})"
    )

###############################################################################
# The infinite-stencil limit
# --------------------------
#
# With the limiting weights the estimate becomes 4/pi times the Leibniz
# series, whose partial sums alternate around 1.

partial = sin_limit_partial_sums(40)
ns = np.arange(1, 41)
stencil = [sin_demo_estimate(int(n)) for n in ns]

fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(ns, stencil, "o-", label="(2n+1)-point stencil")
ax.plot(ns, partial, ".--", label="limit series, partial sums")
ax.axhline(1.0, color="k", lw=0.8)
ax.set_xlabel("n (or number of series terms)")
ax.set_ylabel("estimate of cos(0)")
ax.legend()
fig.tight_layout()
fig.savefig("sin_demo.png", dpi=100)
print("saved sin_demo.png")
