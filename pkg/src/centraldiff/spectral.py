"""
Frequency-domain view of the periodic differentiator kernels.

With the forward transform ``X_r = sum_m x_m exp(-2j pi m r / N)`` the
kernel spectrum ``beta(r)`` of a first-derivative kernel is purely
imaginary and ``Im(conj(beta))`` should track the ideal response
``y1(r) = 2 pi r / N``; a second-derivative kernel has a real spectrum that
should track ``y2(r) = -(2 pi r / N)**2``. The gap between them, reported up
to the Nyquist index, measures how well a stencil differentiates each
spatial frequency.

Differentiation itself can run through the same spectra: correlating the
signal with the kernel is a pointwise product ``c_r * conj(beta(r))``
followed by the inverse transform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .differentiator import DifferentiatorKernel, embed_kernel

__all__ = [
    "dft",
    "kernel_spectrum",
    "ideal_response",
    "DeviationSeries",
    "spectrum_deviation",
    "accuracy_bandwidth",
    "spectral_differentiate",
]


def _direct_dft(x, sign):
    N = x.size
    idx = np.arange(N)
    # Reduce m*r mod N before scaling so the phases stay accurate for large N.
    phase = (np.outer(idx, idx) % N) * (sign * 2.0 * np.pi / N)
    return np.exp(1j * phase) @ x


def dft(x, inverse=False, method="fft"):
    """Discrete Fourier transform with the unnormalised forward convention.

    Parameters
    ----------
    x : array_like
        Sequence of length ``N >= 1``.
    inverse : bool
        If True compute ``x_m = 1/N sum_r X_r exp(+2j pi m r / N)``.
    method : {"fft", "direct"}
        ``"direct"`` evaluates the defining O(N**2) sum; ``"fft"`` uses
        :mod:`numpy.fft`. Both follow the same convention.

    Returns
    -------
    ndarray of complex
    """
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("dft expects a non-empty 1-D sequence")
    if method == "fft":
        return np.fft.ifft(x) if inverse else np.fft.fft(x)
    if method == "direct":
        if inverse:
            return _direct_dft(x, +1) / x.size
        return _direct_dft(x, -1)
    raise ValueError(f"unknown method {method!r}")


def kernel_spectrum(kernel, method="fft"):
    """Forward DFT ``beta(r)`` of an embedded kernel's coefficients."""
    if isinstance(kernel, DifferentiatorKernel):
        kernel = kernel.coefficients
    return dft(kernel, method=method)


def ideal_response(N, order=1):
    """Ideal differentiator response on ``r = 0..N-1``.

    ``2 pi r / N`` for ``order=1``, ``-(2 pi r / N)**2`` for ``order=2``.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    theta = 2.0 * np.pi * np.arange(N) / N
    if order == 1:
        return theta
    if order == 2:
        return 0.0 - theta**2
    raise ValueError(f"order must be 1 or 2, got {order}")


@dataclass(frozen=True)
class DeviationSeries:
    """Kernel response vs. ideal response for ``r = 0..N//2``.

    ``response`` is ``Im(conj(beta))`` for first derivatives and
    ``Re(conj(beta))`` for second derivatives; ``deviation`` is
    ``response - ideal``.
    """

    n: int
    N: int
    order: int
    r: np.ndarray
    response: np.ndarray
    ideal: np.ndarray
    deviation: np.ndarray


def spectrum_deviation(n, N, order=1, method="fft"):
    """Per-frequency deviation of a (2n+1)-point kernel from the ideal differentiator."""
    kernel = embed_kernel(n, N, order)
    beta_conj = np.conj(kernel_spectrum(kernel, method=method))
    half = N // 2 + 1
    response = beta_conj.imag if order == 1 else beta_conj.real
    response = response[:half]
    ideal = ideal_response(N, order)[:half]
    return DeviationSeries(
        n=kernel.n,
        N=N,
        order=order,
        r=np.arange(half),
        response=response,
        ideal=ideal,
        deviation=response - ideal,
    )


def accuracy_bandwidth(series, rel_tol=0.01, r_min=10):
    """Largest ``r*`` with ``|deviation(r)| < rel_tol * |ideal(r)|`` for all ``r_min <= r <= r*``.

    Returns ``r_min - 1`` when the condition already fails at ``r_min``.
    """
    dev = np.abs(series.deviation[r_min:])
    ok = dev < rel_tol * np.abs(series.ideal[r_min:])
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return int(series.r[-1])
    return int(r_min + bad[0] - 1)


def spectral_differentiate(f, h, n, order=1, method="fft"):
    """Periodic derivative via ``IDFT(c_r * conj(beta(r))) / h**order``.

    Agrees with :func:`centraldiff.differentiator.differentiate_periodic`
    up to rounding.
    """
    f = np.asarray(f, dtype=float)
    if f.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    if not h > 0:
        raise ValueError(f"grid spacing must be positive, got {h}")
    kernel = embed_kernel(n, f.size, order)
    c = dft(f, method=method)
    beta = kernel_spectrum(kernel, method=method)
    out = dft(c * np.conj(beta), inverse=True, method=method)
    return out.real / float(h) ** order
