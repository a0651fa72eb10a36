"""
======================================
Differentiating a periodic signal
======================================

The same kernel can be applied by a direct sliding sum or by multiplying
spectra. Both routes agree, and the error against the analytic derivative
falls quickly with the stencil width until round-off takes over.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from centraldiff import differentiate_periodic, spectral_differentiate

N = 256
h = 2 * np.pi / N
x = np.arange(N) * h
f = np.exp(np.sin(3 * x))
df = 3 * np.cos(3 * x) * f
d2f = (9 * np.cos(3 * x) ** 2 - 9 * np.sin(3 * x)) * f

###############################################################################
# Direct vs. FFT
# --------------

direct = differentiate_periodic(f, h, 11, 1)
fft = spectral_differentiate(f, h, 11, 1)
print("max |direct - fft| =", np.abs(direct - fft).max())

###############################################################################
# Error against the stencil width
# -------------------------------

ns = np.arange(1, 31)
err1 = [np.abs(differentiate_periodic(f, h, n, 1) - df).max() for n in ns]
err2 = [np.abs(differentiate_periodic(f, h, n, 2) - d2f).max() for n in ns]

fig, ax = plt.subplots(figsize=(6, 4))
ax.semilogy(ns, err1, "o-", label="first derivative")
ax.semilogy(ns, err2, "s-", label="second derivative")
ax.set_xlabel("n (stencil has 2n+1 points)")
ax.set_ylabel("max abs error")
ax.legend()
fig.tight_layout()
fig.savefig("periodic_error.png", dpi=100)
print("saved periodic_error.png")
