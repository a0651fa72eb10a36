"""
==========================================
How far up in frequency is a stencil good?
==========================================

Each stencil, laid out on a period of N = 2000 samples, is a filter. Its
spectrum is compared to the ideal differentiator: the line 2 pi r/N for
first derivatives and the parabola -(2 pi r/N)**2 for second derivatives.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from centraldiff import accuracy_bandwidth, spectrum_deviation

N = 2000
NS = (1, 11, 21)

###############################################################################
# Spectra against the ideal responses
# -----------------------------------

fig, axes = plt.subplots(2, 2, figsize=(10, 7))
for col, order in enumerate((1, 2)):
    top, bottom = axes[0, col], axes[1, col]
    for n in NS:
        s = spectrum_deviation(n, N, order)
        top.plot(s.r, s.response, label=f"n = {n}")
        dev = np.abs(s.deviation)
        bottom.semilogy(s.r[1:], np.maximum(dev[1:], 1e-17), label=f"n = {n}")
        print(f"order {order}, n = {n:2d}: 1% band ends at r* = {accuracy_bandwidth(s)}")
    top.plot(s.r, s.ideal, "k--", lw=0.8, label="ideal")
    top.set_title(f"order {order} kernel spectrum")
    bottom.set_title(f"order {order} |deviation|")
    bottom.set_xlabel("r")
    top.legend()
fig.tight_layout()
fig.savefig("kernel_spectra.png", dpi=100)
print("saved kernel_spectra.png")

###############################################################################
# .. note::
#    At small r the deviations of the 23- and 43-point kernels sit at the
#    double-precision floor, so the log plot there shows round-off only.
